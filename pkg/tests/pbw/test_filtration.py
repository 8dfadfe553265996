import random

import pytest

from pbwcheck.centralext import Deformation, build_central_extension
from pbwcheck.enums import Status
from pbwcheck.freealg import Alphabet, Field, FreeAlgebra
from pbwcheck.pbw import build_pk, jacobi_check, verify_lemma41
from pbwcheck.rewrite import complete
from pbwcheck.errors import TruncationError


def test_cubic_relations(section4):
    filtration = build_pk(section4, 3)

    assert filtration.dims() == {1: 0, 2: 0, 3: 2}
    assert filtration.contains(3, section4.relations[0])


def test_pure_cubic_deformation(cubic_def):
    filtration = build_pk(cubic_def, 4)

    assert filtration.dims() == {1: 0, 2: 0, 3: 2, 4: 10}
    assert filtration.contains(3, cubic_def.relations[1])


def test_spaces_are_nested(sl2):
    filtration = build_pk(sl2, 4)

    for k in range(1, 4):
        for vector in filtration.space(k).rows:
            assert filtration.space(k + 1).contains(vector)


def test_beyond_kmax(sl2):
    with pytest.raises(TruncationError):
        build_pk(sl2, 2).space(3)


def test_cubic_consequence(section4):
    ring = section4.ring
    x, y, w = ring.gens()
    f = x * x * w - w * y * y
    filtration = build_pk(section4, 5)

    assert filtration.contains(5, f)
    assert not filtration.contains(4, f)
    assert f in complete(section4.relations, 5)
    assert section4.base.reduce(f)


@pytest.mark.parametrize('name, c, failing', [
    ('sl2', 2, []),
    ('sl2_perturbed', 2, [2]),
    ('section4', 4, [3, 4]),
    ('weyl', 0, []),
    ('cubic_def', 3, [3]),
])
def test_jacobi(request, name, c, failing):
    jacobi = jacobi_check(request.getfixturevalue(name), c)

    assert jacobi.p1_zero
    assert [e.k for e in jacobi.failures] == failing
    assert jacobi.holds == (not failing)
    assert not jacobi.conditional


def test_jacobi_witness(section4):
    ring = section4.ring
    x, y, w = ring.gens()
    witness = jacobi_check(section4, 4).failures[0].witness

    assert witness in (w * y - y * w, y * w - w * y)


def test_jacobi_with_lower_bound(sl2):
    jacobi = jacobi_check(sl2, 2, Status.AT_LEAST)

    assert jacobi.holds
    assert jacobi.conditional


def test_nothing_to_check_without_third_step(ring):
    x, y = ring.gens()
    deformation = Deformation(ring, [x * y - y * x - x], 4)
    jacobi = jacobi_check(deformation, 0)

    assert jacobi.p1_zero
    assert jacobi.to_dict()['checked_k'] == []


@pytest.mark.parametrize('name, bound', [
    ('sl2', 5),
    ('sl2_perturbed', 5),
    ('weyl', 5),
    ('section4', 6),
])
def test_homogenized_ideal_matches_filtration(request, name, bound):
    deformation = request.getfixturevalue(name)
    extension = build_central_extension(deformation, 'z', bound)

    assert verify_lemma41(deformation, bound, extension).holds


def test_lemma_needs_completed_extension(sl2):
    extension = build_central_extension(sl2, 'z', 4)

    with pytest.raises(TruncationError):
        verify_lemma41(sl2, 5, extension)


def _random_relation(rng, ring, top):
    terms = []
    for degree in range(top + 1):
        words = list(ring.words(degree))
        count = rng.randint(1, 2) if degree == top else rng.randint(0, 1)
        terms.extend((w, rng.randrange(1, 101)) for w in rng.sample(words, min(count, len(words))))

    return ring.from_terms(terms)


@pytest.mark.parametrize('seed', range(200))
def test_homogenized_ideal_matches_filtration_random(seed):
    rng = random.Random(seed)
    names = ['x', 'y', 'w'][:rng.choice([2, 3])]
    ring = FreeAlgebra(Alphabet(names), Field.prime(101))
    # F^k T grows fast with three letters
    kmax = 6 if len(names) == 2 else 4

    count = rng.randint(1, 2)
    relations = []
    while len(relations) < count:
        relation = _random_relation(rng, ring, rng.choice([2, 3]))
        if relation.degree >= 2 and relation.top_component() not in [e.top_component() for e in relations]:
            relations.append(relation)

    deformation = Deformation(ring, relations, kmax)
    extension = build_central_extension(deformation, 'z', kmax)

    assert verify_lemma41(deformation, kmax, extension).holds
