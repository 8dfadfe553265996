import logging
import typing as t

from .deformation import Deformation
from ..alias import Word
from ..freealg import (
    CENTRAL,
    ExtendedNCPoly,
    NCPoly,
    extend_poly,
    homogenize
)
from ..linalg import SparseMatrix, Subspace
from ..rewrite import RewriteSystem, complete
from ..errors import InconsistencyError, TruncationError

logger = logging.getLogger(__name__)


class CentralExtension:
    """
    `D = T[z] / <h(r_i + l_i)>`, the central extension attached to a deformation.

    `z` commutes with everything through the normalized words of `T[z]`,
    so the rewrite system only holds the homogenized relations.
    """
    def __repr__(self):
        return (
            f'CentralExtension(central={self.zname!r}, '
            f'relations={[str(e) for e in self.relations]!r}, bound={self.bound})'
        )

    def __init__(self, deformation: Deformation, zname: str, bound: int):
        self.deformation = deformation
        self.zname = zname
        self.bound = bound
        self.ring = deformation.ring.extend(zname)

        self.relations: t.Tuple[ExtendedNCPoly, ...] = tuple(
            homogenize(e, self.ring) for e in deformation.relations
        )
        self.rewrite: RewriteSystem = complete(self.relations, bound, ring=self.ring)

    def to_dict(self):
        return {
            '_': 'CentralExtension',
            'central': self.zname,
            'relations': [str(e) for e in self.relations],
            'bound': self.bound
        }

    @property
    def base(self):
        return self.deformation.base

    def lift(self, f: NCPoly) -> ExtendedNCPoly:
        """Embed a polynomial of `T` into `T[z]`."""
        if f.ring == self.ring:
            return f

        return extend_poly(f, self.ring)

    @property
    def z(self) -> ExtendedNCPoly:
        return self.ring.central_gen()

    def reduce(self, g: NCPoly) -> ExtendedNCPoly:
        """The projection `T[z] -> D` on normal-form representatives."""
        return self.rewrite.normal_form(self.lift(g))

    def normal_words(self, degree: int) -> t.List[Word]:
        return self.rewrite.normal_words(degree)

    def dimension(self, degree: int) -> int:
        return len(self.normal_words(degree))

    def z_map(self, degree: int, power: int = 1) -> SparseMatrix:
        """Matrix of right multiplication by `z^power` from `D_degree`."""
        target = self.normal_words(degree + power)
        index = {word: i for i, word in enumerate(target)}
        prefix = (CENTRAL,) * power

        rows = []
        for word in self.normal_words(degree):
            rows.append({
                index[w]: v
                for w, v in self.rewrite.nf_word(prefix + word).items()
            })

        return SparseMatrix.from_rows(rows, len(target), self.ring.field)

    def quotient_mismatches(self) -> t.List[t.Tuple[int, int, int]]:
        """Degrees `k` with `dim D_k - dim (zD)_k != dim A_k`, as `(k, lhs, rhs)`."""
        dims = self.base.hilbert(self.bound)
        result = []
        for k in range(self.bound + 1):
            image = self.z_map(k - 1).rank if k else 0
            quotient = self.dimension(k) - image
            if quotient != dims[k]:
                result.append((k, quotient, dims[k]))

        return result


class ZeroDivisor(t.NamedTuple):
    """A nonzero class of `D_degree` killed by `z^power`."""
    degree: int
    power: int
    element: ExtendedNCPoly

    def to_dict(self):
        return {
            'degree': self.degree,
            'power': self.power,
            'element': str(self.element)
        }


class Regularity(t.NamedTuple):
    regular: bool
    window: t.Tuple[int, int]
    witness: t.Optional[ZeroDivisor]

    def to_dict(self):
        return {
            'regular': self.regular,
            'window': {'p': self.window[0], 'N': self.window[1]},
            'witness': self.witness.to_dict() if self.witness else None
        }


def build_central_extension(
    deformation: Deformation,
    zname: str = 'z',
    bound: t.Optional[int] = None
) -> CentralExtension:
    """
    Build `D` for `deformation`, complete to `bound`.

    Raises:
        NameCollisionError: `zname` is a generator of the deformation.
        InconsistencyError: `D / zD` and `A` have different dimensions.
    """
    bound = deformation.max_degree if bound is None else bound
    extension = CentralExtension(deformation, zname, bound)

    mismatches = extension.quotient_mismatches()
    if mismatches:
        raise InconsistencyError({
            f'dim(D/zD)_{k} vs dim A_{k}': f'{lhs} != {rhs}'
            for k, lhs, rhs in mismatches
        })

    logger.info(
        'central extension %s: dims %s',
        zname,
        [extension.dimension(k) for k in range(bound + 1)]
    )
    return extension


def regular_to_degree(
    extension: CentralExtension,
    p: int,
    bound: t.Optional[int] = None
) -> Regularity:
    """
    Check that `z^n: D_k -> D_{k+n}` is injective for `k <= p`, `k + n <= N`.

    Kernels only grow with `n`, so each `k` is tested with the largest
    power first; on failure the smallest killing power gives the witness.

    Raises:
        TruncationError: the window is empty (`p + 1 > N`) or `N` exceeds
            the completed degree of `D`.
    """
    bound = extension.bound if bound is None else bound
    if p + 1 > bound:
        raise TruncationError(p + 1, bound, what='regularity window')

    if bound > extension.rewrite.complete_to:
        raise TruncationError(bound, extension.rewrite.complete_to, what='rewrite system of D')

    field = extension.ring.field
    for k in range(p + 1):
        if not extension.normal_words(k):
            continue

        if not extension.z_map(k, bound - k).left_kernel():
            continue

        for power in range(1, bound - k + 1):
            kernel = extension.z_map(k, power).left_kernel()
            if kernel:
                words = extension.normal_words(k)
                vector = Subspace(len(words), field, kernel).rows[0]
                element = extension.ring.element({words[i]: v for i, v in vector.items()})
                logger.info('z^%d kills a class of degree %d: %s', power, k, element)
                return Regularity(False, (p, bound), ZeroDivisor(k, power, element))

    return Regularity(True, (p, bound), None)


def export_presentation(extension: CentralExtension) -> str:
    """
    Render `D` in the presentation grammar.

    The central variable becomes an ordinary generator, so its
    commutators are listed as relations.
    """
    field = extension.ring.field
    names = extension.ring.alphabet.names
    zname = extension.zname

    lines = [
        f'# central extension by {zname}',
        'field Q' if field.characteristic == 0 else f'field GF {field.characteristic}',
        f'gens {" ".join(names)} {zname}'
    ]
    lines.extend(f'rel {e}' for e in extension.relations)
    lines.extend(f'rel {zname}*{x} - {x}*{zname}' for x in names)
    return '\n'.join(lines) + '\n'
