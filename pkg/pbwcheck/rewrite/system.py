import logging
import typing as t

from .reducer import Reducer, Terms, add_term
from ..alias import Word
from ..freealg import CENTRAL, FreeAlgebra, NCPoly
from ..gadgets.utils import Cache, env
from ..errors import TracesUnavailableError, TruncationError

logger = logging.getLogger(__name__)


class Cofactor(t.NamedTuple):
    """One summand `coeff * left * g_index * right` of an ideal membership."""
    index: int
    left: Word
    right: Word
    coeff: t.Any


class RewriteSystem:
    """
    A Groebner basis of a two-sided ideal, complete up to `complete_to`.

    For homogeneous generators, normal forms of every polynomial of degree
    at most `complete_to` are exact. For other generators the basis is only
    complete in that window of ambiguities.
    """
    def __repr__(self):
        return (
            f'RewriteSystem(basis={len(self.basis)}, '
            f'complete_to={self.complete_to}, traces={self.has_traces})'
        )

    def __init__(
        self,
        ring: FreeAlgebra,
        generators: t.List[NCPoly],
        reducer: Reducer,
        complete_to: int,
        traces: bool = False
    ):
        self.ring = ring
        self.generators = tuple(generators)
        self.complete_to = complete_to
        self.has_traces = traces
        self.homogeneous = all(g.is_homogeneous() for g in generators)

        self._reducer = reducer
        self._memo: Cache[Word, Terms] = Cache(
            max_size=env('PBWCHECK_NF_CACHE', 200_000, int),
            slack=0.1
        )
        self._normal_words: t.Dict[int, t.List[Word]] = {}

    @property
    def basis(self) -> t.List[NCPoly]:
        return [
            self.ring.element(self._reducer.terms(index))
            for index in sorted(self._reducer.elements)
        ]

    @property
    def leads(self) -> t.List[Word]:
        return sorted(self._reducer.leads, key=lambda e: (len(e), e))

    def to_dict(self):
        return {
            '_': 'RewriteSystem',
            'basis': [str(e) for e in self.basis],
            'complete_to': self.complete_to
        }

    def _check_degree(self, degree: int):
        if degree > self.complete_to:
            raise TruncationError(degree, self.complete_to)

    def is_normal(self, word: Word) -> bool:
        return self._reducer.find(word) is None

    def nf_word(self, word: Word) -> Terms:
        """Normal form of one word as raw terms, memoised."""
        value = self._memo.get(word)
        if value is None:
            value = self._reducer.reduce(
                {word: self.ring.field.one},
                memo=self._memo.get
            )
            self._memo.add_or_update(word, value)

        return value

    def nf_terms(self, terms: t.Mapping[Word, t.Any]) -> Terms:
        result: Terms = {}
        for word, coeff in terms.items():
            for w, v in self.nf_word(word).items():
                add_term(result, w, coeff * v)

        return result

    def normal_form(self, f: NCPoly) -> NCPoly:
        """
        Reduce `f` to its normal form.

        Raises:
            TruncationError: `f` has degree above `complete_to`.
        """
        self._check_degree(f.degree)
        return f.ring.element(self.nf_terms(f.terms))

    def contains(self, f: NCPoly) -> bool:
        return not self.normal_form(f)

    __contains__ = contains

    def reduce_with_cofactors(self, f: NCPoly) -> t.Tuple[NCPoly, t.List[Cofactor]]:
        """
        Reduce `f` recording the generators used.

        Returns `(remainder, cofactors)` with
        `f == remainder + sum(c * u * g_i * w for i, u, w, c in cofactors)`.

        Raises:
            TracesUnavailableError: the system was built without traces.
            TruncationError: `f` has degree above `complete_to`.
        """
        if not self.has_traces:
            raise TracesUnavailableError()

        self._check_degree(f.degree)

        trace = {}
        remainder = self._reducer.reduce(f.terms, trace)
        cofactors = [
            Cofactor(index, left, right, coeff)
            for (index, left, right), coeff in sorted(
                trace.items(),
                key=lambda e: (e[0][0], len(e[0][1]), e[0][1], e[0][2])
            )
        ]
        return f.ring.element(remainder), cofactors

    def normal_words(self, degree: int) -> t.List[Word]:
        """Normal words of `degree`, largest first."""
        self._check_degree(degree)

        cached = self._normal_words.get(degree)
        if cached is not None:
            return cached

        reducer = self._reducer
        if degree == 0:
            result = [] if () in reducer.leads else [()]

        elif not self.ring.central:
            result = [
                word + (letter,)
                for word in self.normal_words(degree - 1)
                for letter in self.ring.letters
                if not reducer.has_suffix_lead(word + (letter,))
            ]

        else:
            result = []
            for power in range(degree + 1):
                layer = [(CENTRAL,) * power]
                if reducer.find(layer[0]) is not None:
                    continue

                for _ in range(degree - power):
                    layer = [
                        word + (letter,)
                        for word in layer
                        for letter in self.ring.letters
                        if not reducer.has_suffix_lead(word + (letter,))
                    ]

                result.extend(layer)

        result.sort(reverse=True)
        self._normal_words[degree] = result
        return result

    def dimension(self, degree: int) -> int:
        return len(self.normal_words(degree))


def normal_form(f: NCPoly, rs: RewriteSystem) -> NCPoly:
    return rs.normal_form(f)


def reduce_with_cofactors(f: NCPoly, rs: RewriteSystem):
    return rs.reduce_with_cofactors(f)
