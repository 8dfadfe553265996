import pytest

from pbwcheck.cli import parse_text
from pbwcheck.enums import Status
from pbwcheck.resolution import complexity, euler_check, minimal_resolution
from pbwcheck.resolution.invariants import trailing_window


def test_trailing_window():
    assert trailing_window(8) == (7, 8)
    assert trailing_window(10) == (8, 10)
    assert trailing_window(3) == (3, 3)


def test_polynomial_ring(poly3):
    cx = complexity(minimal_resolution(poly3, hmax=3, bound=8))

    assert cx.value == 2
    assert cx.status is Status.EXACT
    assert not cx.unbounded
    # the top entry degree of M3 M2 is the same number
    assert cx.entry_degree == 2


def test_mixed_degrees(ex53):
    cx = complexity(minimal_resolution(ex53, hmax=3, bound=10))

    assert (cx.value, cx.status) == (2, Status.EXACT)
    assert cx.entry_degree == 2
    assert cx.to_dict()['status'] == 'exact'


def test_unbounded_growth(ex52, caplog):
    cx = complexity(minimal_resolution(ex52, hmax=3, bound=8))

    assert cx.value == 7
    assert cx.status is Status.AT_LEAST
    assert cx.unbounded
    assert 'at least 7' in caplog.text


def test_no_third_step(free2):
    cx = complexity(minimal_resolution(free2, hmax=3, bound=6))

    assert (cx.value, cx.status, cx.entry_degree) == (0, Status.EXACT, None)


@pytest.mark.parametrize('bound, value', [(8, 0), (10, 8)])
def test_bound_below_first_overlap(texts, caplog, bound, value):
    # the only relation has degree 5, so Ext^3 may still appear up to degree 9
    algebra = parse_text(texts['self_overlap'], max_degree=bound).base
    cx = complexity(minimal_resolution(algebra, hmax=3, bound=bound))

    assert cx.value == value
    assert cx.status is Status.AT_LEAST
    assert cx.relation_degree == 5
    assert f'at least {value}' in caplog.text


def test_cubic_artin_schelter(cubic3):
    res = minimal_resolution(cubic3, hmax=3, bound=8)
    cx = complexity(res)

    assert res.shifts(2) == [-3, -3]
    assert res.shifts(3) == [-4]
    assert (cx.value, cx.status) == (3, Status.EXACT)
    assert cx.entry_degree == 3
    assert cx.purity == 3
    assert cx.within_relation_degree


def test_mixed_degree_artin_schelter(as4):
    res = minimal_resolution(as4, hmax=3, bound=8)
    cx = complexity(res)

    assert as4.hilbert(6) == [1, 2, 4, 7, 11, 16, 23]
    assert res.shifts(2) == [-3, -4]
    assert res.shifts(3) == [-6, -6]
    assert (cx.value, cx.status) == (5, Status.EXACT)
    assert cx.entry_degree == 5
    assert cx.purity is None
    assert cx.within_relation_degree is None


def test_koszul_complexity_within_relation_degree(poly3):
    data = complexity(minimal_resolution(poly3, hmax=3, bound=8)).to_dict()

    assert data['purity'] == 2
    assert data['relation_degree'] == 2
    assert data['within_relation_degree']


def test_euler_identity_on_koszul_algebra(poly3):
    check = euler_check(poly3, 8)

    assert check.ok
    assert check.checked_upto == 8


def test_euler_identity_stops_before_fourth_step(ex53):
    check = euler_check(ex53, 8)

    assert check.ok
    assert check.checked_upto == 3
    assert check.failures == []
