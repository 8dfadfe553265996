import heapq
import logging
import itertools
import typing as t

from .reducer import Reducer, Terms, Trace, add_term, add_trace
from .system import RewriteSystem
from ..alias import Word
from ..freealg import FreeAlgebra, NCPoly, central_power
from ..errors import ZeroPolynomialError

logger = logging.getLogger(__name__)

_CANDIDATE = 0
_OVERLAP = 1
_CENTRAL = 2


def overlaps(first: Word, second: Word) -> t.Iterator[int]:
    """Lengths `k` of proper overlaps, a suffix of `first` equal to a prefix of `second`."""
    for k in range(1, min(len(first), len(second))):
        if first[-k:] == second[:k]:
            yield k


class _Completion:
    def __init__(self, ring: FreeAlgebra, bound: int, traces: bool):
        self.ring = ring
        self.bound = bound
        self.with_traces = traces

        self.reducer = Reducer(ring)
        self.queue: t.List[tuple] = []
        self.counter = itertools.count()
        self.ids = itertools.count()

        self.pairs = 0
        self.degree = -1

    def push(self, degree: int, kind: int, payload):
        heapq.heappush(self.queue, (degree, next(self.counter), kind, payload))

    def push_candidate(self, terms: Terms, trace: t.Optional[Trace]):
        degree = max(map(len, terms), default=0)
        self.push(degree, _CANDIDATE, (terms, trace))

    def _spoly(self, kind: int, payload) -> t.Optional[t.Tuple[Terms, t.Optional[Trace]]]:
        reducer = self.reducer
        concat = self.ring.concat

        if kind == _CANDIDATE:
            terms, trace = payload
            return dict(terms), (dict(trace) if trace is not None else None)

        if kind == _CENTRAL:
            index, letter = payload
            if index not in reducer.elements:
                return None

            terms = {}
            for w, v in reducer.terms(index).items():
                add_term(terms, concat((letter,), w), v)

            return terms, None

        first, second, k = payload
        if first not in reducer.elements or second not in reducer.elements:
            return None

        lead_a = reducer.elements[first][0]
        lead_b = reducer.elements[second][0]
        right = lead_b[k:]
        left = lead_a[:len(lead_a) - k]

        terms: Terms = {}
        for w, v in reducer.terms(first).items():
            add_term(terms, concat(w, right), v)

        for w, v in reducer.terms(second).items():
            add_term(terms, concat(left, w), -v)

        trace = None
        if self.with_traces:
            one = self.ring.field.one
            trace = {}
            add_trace(trace, reducer.traces[first], (), right, one)
            add_trace(trace, reducer.traces[second], left, (), -one)

        return terms, trace

    def insert(self, terms: Terms, trace: t.Optional[Trace]):
        reducer = self.reducer
        lead = max(terms, key=lambda e: (len(e), e))
        inverse = terms[lead] ** -1
        terms = {k: v * inverse for k, v in terms.items()}
        if trace is not None:
            trace = {k: v * inverse for k, v in trace.items()}

        # elements whose lead the new lead divides leave the basis
        for index, (other, _) in list(reducer.elements.items()):
            if _contains(other, lead):
                _, old_terms, old_trace = reducer.remove(index)
                self.push_candidate(old_terms, old_trace)

        index = next(self.ids)
        reducer.add(index, terms, lead, trace)

        for other, (other_lead, _) in reducer.elements.items():
            for k in overlaps(lead, other_lead):
                degree = len(lead) + len(other_lead) - k
                if degree <= self.bound:
                    self.push(degree, _OVERLAP, (index, other, k))

            if other == index:
                continue

            for k in overlaps(other_lead, lead):
                degree = len(lead) + len(other_lead) - k
                if degree <= self.bound:
                    self.push(degree, _OVERLAP, (other, index, k))

        if self.ring.central and central_power(lead) and len(lead) < self.bound:
            for letter in self.ring.letters:
                self.push(len(lead) + 1, _CENTRAL, (index, letter))

    def run(self):
        reducer = self.reducer
        while self.queue:
            degree, _, kind, payload = heapq.heappop(self.queue)
            if degree > self.degree:
                if self.degree >= 0:
                    logger.debug(
                        'degree %d done: %d elements, %d pairs',
                        self.degree, len(reducer), self.pairs
                    )
                self.degree = degree

            spoly = self._spoly(kind, payload)
            if spoly is None:
                continue

            if kind != _CANDIDATE:
                self.pairs += 1

            terms, trace = spoly
            terms = reducer.reduce(terms, trace)
            if terms:
                self.insert(terms, trace)

    def interreduce(self):
        reducer = self.reducer
        for index in sorted(reducer.elements):
            lead, tail = reducer.elements[index]
            if not tail:
                continue

            # tail = reduced + sum(cofactors), the element drops the cofactors
            cofactors = {} if self.with_traces else None
            reduced = reducer.reduce(tail, cofactors)
            if cofactors:
                add_trace(reducer.traces[index], cofactors, (), (), -self.ring.field.one)

            reducer.elements[index] = (lead, reduced)


def _contains(word: Word, part: Word) -> bool:
    size = len(part)
    return any(
        word[i:i + size] == part
        for i in range(len(word) - size + 1)
    )


def complete(
    ideal_gens: t.Sequence[NCPoly],
    bound: int,
    *,
    traces: bool = False,
    ring: t.Optional[FreeAlgebra] = None
) -> RewriteSystem:
    """
    Complete a two-sided ideal to a Groebner basis truncated at `bound`.

    Critical pairs are processed by increasing degree of their ambiguity,
    so for homogeneous generators every element of degree at most `bound`
    is final once the queue moves past it. With `traces=True` each basis
    element records how it is built from `ideal_gens`.

    Args:
        ideal_gens (Sequence[NCPoly]): nonzero generators, all from one ring.
        bound (int): largest ambiguity degree to resolve.
        traces (bool): record cofactors (rings without central variable only).
        ring (FreeAlgebra, optional): ring to use when `ideal_gens` is empty.

    Returns:
        RewriteSystem: the monic inter-reduced basis, complete to `bound`.

    Example:
        >>> rs = complete([x * y - y * x], 6)
        >>> rs.normal_form(x * y * x)
        y*x^2
    """
    if ring is None:
        if not ideal_gens:
            raise ValueError('a ring is needed for an empty generating set')

        ring = ideal_gens[0].ring

    if traces and ring.central:
        raise ValueError('cofactor traces are only recorded without a central variable')

    for g in ideal_gens:
        if not g:
            raise ZeroPolynomialError('ideal generators must be nonzero')

    state = _Completion(ring, bound, traces)
    one = ring.field.one
    for index, g in enumerate(ideal_gens):
        state.push_candidate(
            dict(g.terms),
            {(index, (), ()): one} if traces else None
        )

    state.run()
    state.interreduce()

    logger.info(
        'completed %d generators to degree %d: %d basis elements, %d pairs',
        len(ideal_gens), bound, len(state.reducer), state.pairs
    )

    return RewriteSystem(
        ring,
        list(ideal_gens),
        state.reducer,
        bound,
        traces=traces
    )
