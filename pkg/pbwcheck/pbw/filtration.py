import logging
import typing as t

from ..enums import Status
from ..freealg import NCPoly, evaluate_central
from ..linalg import Subspace, WordBasis
from ..centralext import CentralExtension, Deformation
from ..errors import TruncationError

logger = logging.getLogger(__name__)


class PkFiltration:
    """
    The spaces `P_k = V P_{k-1} + P_{k-1} V + span(P & F^k T)`.

    `P_k` lives in the coordinates of `F^k T`, all words of degree at most
    `k` ordered by degree and then word. `F^{k-1} T` is a prefix of those
    coordinates, so a vector of `P_{k-1}` is also a vector of `P_k`.
    """
    def __repr__(self):
        return f'PkFiltration(dims={self.dims()})'

    def __init__(self, deformation: Deformation, kmax: int):
        if kmax < 1:
            raise ValueError('kmax must be at least 1')

        self.deformation = deformation
        self.ring = deformation.ring
        self.kmax = kmax

        self._coordinates: t.Dict[int, WordBasis] = {}
        self.spaces: t.Dict[int, Subspace] = {}
        self.spaces[0] = Subspace.zero(1, self.ring.field, self.coordinates(0).words)

        for k in range(1, kmax + 1):
            self.spaces[k] = self._build(k)
            logger.debug('dim P_%d = %d', k, self.spaces[k].dim)

    def coordinates(self, k: int) -> WordBasis:
        if k not in self._coordinates:
            self._coordinates[k] = WordBasis(self.ring.words_upto(k))

        return self._coordinates[k]

    def _build(self, k: int) -> Subspace:
        coords = self.coordinates(k)
        vectors = []
        for poly in self.polys(k - 1):
            for x in self.ring.gens():
                vectors.append(coords.vector(x * poly))
                vectors.append(coords.vector(poly * x))

        for relation in self.deformation.relations:
            if relation.degree <= k:
                vectors.append(coords.vector(relation))

        return Subspace(len(coords), self.ring.field, vectors, coords.words)

    def space(self, k: int) -> Subspace:
        if k > self.kmax:
            raise TruncationError(k, self.kmax, what='P_k filtration')

        return self.spaces[k]

    def polys(self, k: int) -> t.List[NCPoly]:
        """Echelon basis of `P_k` as polynomials."""
        coords = self.coordinates(k)
        return [coords.poly(v, self.ring) for v in self.space(k).rows]

    def dims(self) -> t.Dict[int, int]:
        return {k: self.spaces[k].dim for k in range(1, self.kmax + 1)}

    def restrict(self, k: int, to: int) -> Subspace:
        """`P_k & F^to T` in the coordinates of `F^to T`, for `to < k`."""
        space = self.space(k)
        size = len(self.coordinates(to))
        prefix = Subspace(
            space.ambient,
            space.field,
            ({i: space.field.one} for i in range(size)),
            space.coordinates
        )
        inside = space.intersect(prefix)
        return Subspace(size, space.field, inside.rows, self.coordinates(to).words)

    def contains(self, k: int, poly: NCPoly) -> bool:
        if poly.degree > k:
            return False

        return self.space(k).contains(self.coordinates(k).vector(poly))


def build_pk(deformation: Deformation, kmax: int) -> PkFiltration:
    return PkFiltration(deformation, kmax)


class JacobiFailure(t.NamedTuple):
    """`witness` lies in `P_{k+1} & F^k T` but not in `P_k`."""
    k: int
    witness: NCPoly

    def to_dict(self):
        return {'k': self.k, 'witness': str(self.witness)}


class Jacobi(t.NamedTuple):
    holds: bool
    p1_zero: bool
    upto: int
    failures: t.List[JacobiFailure]
    conditional: bool

    def to_dict(self):
        return {
            'holds': self.holds,
            'p1_zero': self.p1_zero,
            'checked_k': [1, self.upto] if self.upto >= 1 else [],
            'failures': [e.to_dict() for e in self.failures],
            'conditional': self.conditional
        }


def jacobi_check(
    deformation: Deformation,
    c: int,
    status: Status = Status.EXACT,
    filtration: t.Optional[PkFiltration] = None
) -> Jacobi:
    """
    Check `P_1 = 0` and `P_{k+1} & F^k T <= P_k` for `1 <= k <= c`.

    Every failing `k` is reported with a witness reduced modulo `P_k`.
    With a complexity that is only a lower bound the result is marked
    conditional: failures still disprove PBW, a pass certifies nothing.
    """
    if filtration is None or filtration.kmax < c + 1:
        filtration = build_pk(deformation, max(c + 1, 1))

    ring = deformation.ring
    p1_zero = filtration.space(1).dim == 0
    failures = []

    for k in range(1, c + 1):
        inside = filtration.restrict(k + 1, k)
        current = filtration.space(k)
        for vector in inside.rows:
            residue = current.reduce(vector)
            if residue:
                witness = filtration.coordinates(k).poly(residue, ring).monic()
                failures.append(JacobiFailure(k, witness))
                logger.info('P_%d & F^%d is not inside P_%d: %s', k + 1, k, k, witness)
                break

    holds = p1_zero and not failures
    return Jacobi(holds, p1_zero, c, failures, not status.is_exact)


class Lemma41(t.NamedTuple):
    holds: bool
    degrees: t.Dict[int, bool]

    def to_dict(self):
        return {
            'holds': self.holds,
            'degrees': {str(k): v for k, v in self.degrees.items()}
        }


def homogenized_slice(extension: CentralExtension, k: int) -> t.List[NCPoly]:
    """`phi_1` of a basis of `<h(P)>_k`, one `w - nf(w)` per reducible word."""
    normal = set(extension.normal_words(k))
    rewrite = extension.rewrite
    ring = extension.ring
    result = []
    for word in ring.words(k):
        if word in normal:
            continue

        terms = {w: -v for w, v in rewrite.nf_word(word).items()}
        terms[word] = terms.get(word, ring.field.zero) + ring.field.one
        result.append(evaluate_central(ring.element(terms), 1))

    return result


def verify_lemma41(
    deformation: Deformation,
    kmax: int,
    extension: CentralExtension,
    filtration: t.Optional[PkFiltration] = None
) -> Lemma41:
    """
    Compare `phi_1(<h(P)>_k)` with `P_k` for `1 <= k <= kmax`.

    Raises:
        TruncationError: the rewrite system of `D` is not complete to `kmax`.
    """
    if kmax > extension.rewrite.complete_to:
        raise TruncationError(kmax, extension.rewrite.complete_to, what='rewrite system of D')

    if filtration is None or filtration.kmax < kmax:
        filtration = build_pk(deformation, kmax)

    degrees = {}
    for k in range(1, kmax + 1):
        coords = filtration.coordinates(k)
        image = Subspace(
            len(coords),
            deformation.ring.field,
            (coords.vector(e) for e in homogenized_slice(extension, k)),
            coords.words
        )
        degrees[k] = image == filtration.space(k)

    return Lemma41(all(degrees.values()), degrees)
