import pytest

from pbwcheck.centralext import Deformation, build_central_extension, export_presentation
from pbwcheck.cli import parse_text
from pbwcheck.resolution import GradedAlgebra
from pbwcheck.errors import LinearRelationError, NameCollisionError, PresentationError


def test_base_from_top_components(ring):
    x, y = ring.gens()
    deformation = Deformation(ring, [x * y - y * x - 1], 5)

    assert deformation.base.relations == (x * y - y * x,)
    assert deformation.lower(0) == ring.scalar(-1)
    assert not deformation.is_trivial()


def test_explicit_base_must_match(ring):
    x, y = ring.gens()
    base = GradedAlgebra(ring, [x * y + y * x], 5)

    with pytest.raises(PresentationError):
        Deformation(ring, [x * y - y * x - x], 5, base=base)


def test_linear_relation(ring):
    x, y = ring.gens()

    with pytest.raises(LinearRelationError):
        Deformation(ring, [x - 1], 5)


def test_homogenized_relations(weyl, sl2):
    assert [str(e) for e in build_central_extension(weyl).relations] == ['x*y - y*x - z^2']

    extension = build_central_extension(sl2, 'z', 5)
    assert str(extension.relations[0]) == 'e*f - f*e - z*h'
    # U(sl2) is PBW, so D is a polynomial ring in four variables
    assert [extension.dimension(k) for k in range(5)] == [1, 4, 10, 20, 35]


def test_central_name_collision(ex52):
    deformation = Deformation(ex52.ring, ex52.relations, 8, base=ex52)

    with pytest.raises(NameCollisionError):
        build_central_extension(deformation, 'z')

    assert build_central_extension(deformation, 't', 6).zname == 't'


def test_export_presentation(sl2):
    extension = build_central_extension(sl2, 'z', 5)
    text = export_presentation(extension)

    assert 'gens e f h z' in text
    algebra = parse_text(text, max_degree=4)
    assert algebra.hilbert(4) == [extension.dimension(k) for k in range(5)]
