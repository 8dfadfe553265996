import pytest

from pbwcheck.centralext import build_central_extension, regular_to_degree
from pbwcheck.errors import TruncationError


def test_regular_for_enveloping_algebra(sl2):
    extension = build_central_extension(sl2, 'z', 6)
    result = regular_to_degree(extension, 2)

    assert result.regular
    assert result.window == (2, 6)
    assert result.witness is None


def test_zero_divisor_witness(section4):
    extension = build_central_extension(section4, 'z', 8)
    result = regular_to_degree(extension, 4, 8)

    assert not result.regular
    witness = result.witness
    # z^2 (w*y - y*w) is a commutator of y and y^3 in D
    assert (witness.degree, witness.power) == (2, 2)
    assert witness.element
    assert not extension.reduce(extension.z ** 2 * witness.element)
    assert extension.reduce(extension.z * witness.element)


def test_trivial_window(weyl):
    extension = build_central_extension(weyl, 'z', 6)

    assert regular_to_degree(extension, 0).regular


def test_empty_window(weyl):
    extension = build_central_extension(weyl, 'z', 4)

    with pytest.raises(TruncationError):
        regular_to_degree(extension, 4)


def test_z_map_is_injective_on_polynomial_ring(sl2):
    extension = build_central_extension(sl2, 'z', 5)

    for k in range(4):
        assert extension.z_map(k).rank == extension.dimension(k)


def test_to_dict(sl2):
    extension = build_central_extension(sl2, 'z', 4)
    data = regular_to_degree(extension, 2).to_dict()

    assert data == {'regular': True, 'window': {'p': 2, 'N': 4}, 'witness': None}
