import pytest

from pbwcheck.resolution import GradedAlgebra, minimal_resolution
from pbwcheck.errors import NonMinimalRelationsError, TruncationError


def test_polynomial_ring_is_koszul(poly3):
    res = minimal_resolution(poly3, hmax=3, bound=8)

    assert res.shifts(1) == [-1, -1, -1]
    assert res.shifts(2) == [-2, -2, -2]
    assert res.shifts(3) == [-3]
    assert res.betti.purity() == 2
    assert res.check() == []


def test_example_with_mixed_degrees(ex53):
    res = minimal_resolution(ex53, hmax=3, bound=10)

    assert res.shifts(2) == [-2, -3]
    assert res.shifts(3) == [-3]
    assert res.betti[3, 3] == 1
    assert res.betti.support(3) == [3]
    assert not res.betti.is_pure()
    assert res.check() == []


def test_cubic_artin_schelter_is_three_koszul(cubic3):
    res = minimal_resolution(cubic3, hmax=4, bound=8)

    assert res.shifts(1) == [-1, -1]
    assert res.shifts(2) == [-3, -3]
    assert res.shifts(3) == [-4]
    assert res.rank(4) == 0
    assert res.betti.purity() == 3
    assert res.check() == []


def test_artin_schelter_with_cubic_and_quartic_relation(as4):
    res = minimal_resolution(as4, hmax=4, bound=8)

    assert res.shifts(2) == [-3, -4]
    assert res.shifts(3) == [-6, -6]
    assert res.shifts(4) == [-7]
    assert res.betti.purity() is None
    assert res.check() == []


def test_relations_give_second_matrix(ex53):
    res = minimal_resolution(ex53, hmax=2, bound=6)
    products = res.product(2)

    assert [row[0] for row in products] == list(ex53.relations)


def test_third_step_grows_in_every_degree(ex52):
    res = minimal_resolution(ex52, hmax=3, bound=8)

    assert res.shifts(2) == [-2, -2, -2]
    for j in range(3, 9):
        assert res.betti[3, j] != 0, j


def test_free_algebra(free2):
    res = minimal_resolution(free2, hmax=3, bound=6)

    assert res.rank(2) == 0
    assert res.rank(3) == 0
    assert res.betti.total(1) == 2


def test_matrix_entries_have_expected_degrees(ex53):
    res = minimal_resolution(ex53, hmax=3, bound=8)

    for n in (2, 3):
        for i, row in enumerate(res.matrix(n)):
            for j, entry in enumerate(row):
                if entry:
                    assert entry.degree == res.degrees[n][i] - res.degrees[n - 1][j]


def test_to_dict(poly3):
    data = minimal_resolution(poly3, hmax=3, bound=5).to_dict()

    assert data['shifts']['3'] == [-3]
    assert data['betti']['2'] == {'2': 3}
    assert len(data['matrices']['2']) == 3


def test_bound_beyond_completion(ex53):
    with pytest.raises(TruncationError) as info:
        minimal_resolution(ex53, bound=11)

    assert info.value.needed == 11


def test_non_minimal_relations_are_detected(ring):
    x, y = ring.gens()
    algebra = GradedAlgebra(ring, [x * y, x * y * x], 5)

    with pytest.raises(NonMinimalRelationsError) as info:
        minimal_resolution(algebra, hmax=2)

    assert info.value.pruned == ['x*y']
