import logging
import typing as t

from ..alias import Word
from ..freealg import FreeAlgebra, NCPoly
from ..rewrite import RewriteSystem, complete
from ..errors import (
    LinearRelationError,
    NonMinimalRelationsError,
    PresentationError,
    ZeroPolynomialError
)

logger = logging.getLogger(__name__)


class GradedAlgebra:
    """
    `A = T / <R>` for homogeneous relations `R` of degree at least 2.

    The Groebner basis of `<R>` is completed once, up to `max_degree`; a
    second copy with cofactor traces is built on demand.

    Example:
    ```python
    ring = FreeAlgebra(Alphabet(['x', 'y']))
    x, y = ring.gens()
    algebra = GradedAlgebra(ring, [x * y - y * x], max_degree=6)
    print(algebra.hilbert(4))

    >>> [1, 2, 3, 4, 5]
    ```
    """
    def __repr__(self):
        return (
            f'GradedAlgebra(gens={list(self.ring.alphabet.names)!r}, '
            f'relations={[str(e) for e in self.relations]!r}, '
            f'max_degree={self.max_degree})'
        )

    def __init__(
        self,
        ring: FreeAlgebra,
        relations: t.Sequence[NCPoly],
        max_degree: int
    ):
        if ring.central:
            raise PresentationError('a graded algebra is presented over a ring without central variable')

        for relation in relations:
            if not relation:
                raise ZeroPolynomialError('relations must be nonzero')

            if not relation.is_homogeneous():
                raise PresentationError(f'relation {relation} is not homogeneous')

            if relation.degree < 2:
                raise LinearRelationError(str(relation))

        self.ring = ring
        self.relations: t.Tuple[NCPoly, ...] = tuple(relations)
        self.max_degree = max_degree

        self.rewrite: RewriteSystem = complete(
            self.relations,
            max_degree,
            ring=ring
        )
        self._traced: t.Optional[RewriteSystem] = None

    def to_dict(self):
        return {
            '_': 'GradedAlgebra',
            'field': self.ring.field.name,
            'gens': list(self.ring.alphabet.names),
            'relations': [str(e) for e in self.relations],
            'max_degree': self.max_degree
        }

    @property
    def ngens(self) -> int:
        return len(self.ring.alphabet)

    @property
    def relation_degrees(self) -> t.List[int]:
        return [e.degree for e in self.relations]

    def traced(self) -> RewriteSystem:
        """The Groebner basis of `<R>` with cofactor traces."""
        if self._traced is None:
            self._traced = complete(
                self.relations,
                self.max_degree,
                traces=True,
                ring=self.ring
            )

        return self._traced

    def graded_basis(self, degree: int) -> t.List[Word]:
        return self.rewrite.normal_words(degree)

    def hilbert(self, upto: t.Optional[int] = None) -> t.List[int]:
        upto = self.max_degree if upto is None else upto
        return [len(self.graded_basis(d)) for d in range(upto + 1)]

    def reduce(self, f: NCPoly) -> NCPoly:
        """The projection `T -> A` on normal-form representatives."""
        return self.rewrite.normal_form(f)

    def find_redundant(self) -> t.Tuple[t.List[int], t.List[int]]:
        """
        Indices of relations lying in the ideal of the others.

        Relations are visited in input order and a redundant one is dropped
        before the next is tested. Returns `(redundant, kept)`.
        """
        kept = list(range(len(self.relations)))
        redundant = []
        for index in range(len(self.relations)):
            others = [self.relations[i] for i in kept if i != index]
            if not others:
                continue

            relation = self.relations[index]
            system = complete(others, relation.degree, ring=self.ring)
            if system.contains(relation):
                redundant.append(index)
                kept.remove(index)

        return redundant, kept

    def check_minimal(self, strict: bool = False) -> 'GradedAlgebra':
        """
        Validate that no relation is a consequence of the others.

        Returns the algebra itself when the set is minimal, otherwise the
        algebra on the pruned set (after a warning), or raises with
        `strict=True`.

        Raises:
            NonMinimalRelationsError: the set is not minimal and `strict` is set.
        """
        redundant, kept = self.find_redundant()
        if not redundant:
            return self

        error = NonMinimalRelationsError(
            [str(self.relations[i]) for i in redundant],
            [str(self.relations[i]) for i in kept]
        )
        if strict:
            raise error

        logger.warning('%s', error)
        return GradedAlgebra(
            self.ring,
            [self.relations[i] for i in kept],
            self.max_degree
        )


def graded_basis(algebra: GradedAlgebra, degree: int) -> t.List[Word]:
    return algebra.graded_basis(degree)


def hilbert(algebra: GradedAlgebra, upto: t.Optional[int] = None) -> t.List[int]:
    return algebra.hilbert(upto)
