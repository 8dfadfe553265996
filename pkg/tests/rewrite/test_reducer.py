from pbwcheck.rewrite import Reducer
from pbwcheck.rewrite.reducer import add_term, heap_key


def test_heap_key_orders_largest_first():
    words = [(1,), (2, 1), (1, 2), (2,), ()]
    assert sorted(words, key=heap_key) == [(2, 1), (1, 2), (2,), (1,), ()]


def test_add_term_cancels():
    terms = {(1,): 2}

    assert add_term(terms, (2,), 1)
    assert not add_term(terms, (1,), -2)
    assert terms == {(2,): 1}


def test_find_is_leftmost(ring):
    one = ring.field.one
    reducer = Reducer(ring)
    reducer.add(0, {(2, 1): one, (1, 2): -one}, (2, 1))
    reducer.add(1, {(1, 1): one}, (1, 1))

    assert reducer.find((1, 1, 2, 1)) == (1, 0)
    assert reducer.find((2, 1, 1)) == (0, 0)
    assert reducer.find((1, 2, 2)) is None
    assert reducer.has_suffix_lead((2, 2, 1))
    assert not reducer.has_suffix_lead((2, 1, 2))


def test_reduce_with_trace(ring):
    x, y = ring.gens()
    one = ring.field.one
    reducer = Reducer(ring)
    reducer.add(0, {(2, 1): one, (1, 2): -one}, (2, 1), {(0, (), ()): one})

    trace = {}
    result = reducer.reduce((x * x * y).terms, trace)

    assert ring.element(result) == y * x * x
    assert trace == {(0, (2,), ()): one, (0, (), (2,)): one}


def test_remove_returns_the_element(ring):
    one = ring.field.one
    reducer = Reducer(ring)
    reducer.add(3, {(2, 1): one, (1,): one}, (2, 1))

    lead, terms, trace = reducer.remove(3)
    assert lead == (2, 1)
    assert terms == {(2, 1): one, (1,): one}
    assert trace is None
    assert len(reducer) == 0
    assert reducer.find((2, 1)) is None
