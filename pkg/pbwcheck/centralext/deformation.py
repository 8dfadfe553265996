import typing as t

from ..freealg import FreeAlgebra, NCPoly
from ..resolution import GradedAlgebra
from ..errors import LinearRelationError, PresentationError, ZeroPolynomialError


class Deformation:
    """
    `U = T / <r_i + l_i>`, a filtered deformation of the graded algebra `A`.

    Relation `i` of `U` pairs with relation `i` of the base: its top
    component is `r_i` and the rest, `l_i`, has lower degree.
    """
    def __repr__(self):
        return f'Deformation(relations={[str(e) for e in self.relations]!r})'

    def __init__(
        self,
        ring: FreeAlgebra,
        relations: t.Sequence[NCPoly],
        max_degree: int,
        base: t.Optional[GradedAlgebra] = None
    ):
        for relation in relations:
            if not relation:
                raise ZeroPolynomialError('deformation relations must be nonzero')

            if relation.degree < 2:
                raise LinearRelationError(str(relation))

        tops = [e.top_component() for e in relations]
        if base is None:
            base = GradedAlgebra(ring, tops, max_degree)

        elif base.ring != ring:
            raise PresentationError('the base algebra uses another alphabet or field')

        elif len(base.relations) != len(relations):
            raise PresentationError(
                f'{len(relations)} deformation relations for '
                f'{len(base.relations)} base relations'
            )

        else:
            for index, (top, relation) in enumerate(zip(tops, base.relations)):
                if top != relation:
                    raise PresentationError(
                        f'top component {top} of relation {index + 1} '
                        f'does not match base relation {relation}'
                    )

        self.ring = ring
        self.base = base
        self.relations: t.Tuple[NCPoly, ...] = tuple(relations)
        self.max_degree = max_degree

    def to_dict(self):
        return {
            '_': 'Deformation',
            'field': self.ring.field.name,
            'gens': list(self.ring.alphabet.names),
            'relations': [str(e) for e in self.relations],
            'base': [str(e) for e in self.base.relations]
        }

    def top(self, index: int) -> NCPoly:
        return self.base.relations[index]

    def lower(self, index: int) -> NCPoly:
        """`l_i`, the part of relation `i` below its top degree."""
        return self.relations[index] - self.base.relations[index]

    def is_trivial(self) -> bool:
        return all(not self.lower(i) for i in range(len(self.relations)))
