import typing as t

from .matrix import Vector
from ..alias import Word
from ..errors import AmbientMismatchError
from ..freealg import FreeAlgebra, NCPoly


class WordBasis:
    """An ordered list of words used as coordinates of a space of polynomials."""
    def __repr__(self):
        return f'WordBasis(size={len(self.words)})'

    def __init__(self, words: t.Iterable[Word]):
        self.words: t.Tuple[Word, ...] = tuple(words)
        self.index = {word: i for i, word in enumerate(self.words)}

    def __len__(self):
        return len(self.words)

    def __contains__(self, word: Word):
        return word in self.index

    def vector(self, poly: t.Union[NCPoly, t.Mapping[Word, t.Any]]) -> Vector:
        terms = poly.terms if isinstance(poly, NCPoly) else poly
        try:
            return {self.index[word]: coeff for word, coeff in terms.items()}

        except KeyError as exc:
            raise AmbientMismatchError(
                f'word {exc.args[0]!r} is not a coordinate of this space'
            ) from None

    def poly(self, vector: t.Mapping[int, t.Any], ring: FreeAlgebra) -> NCPoly:
        return ring.element({self.words[i]: v for i, v in vector.items()})
