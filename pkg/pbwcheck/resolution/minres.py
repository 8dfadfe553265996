import logging
import typing as t

from .algebra import GradedAlgebra
from ..alias import Word
from ..freealg import NCPoly
from ..linalg import Echelon, SparseMatrix, Subspace, Vector
from ..errors import (
    NonMinimalRelationsError,
    PresentationError,
    TruncationError
)

logger = logging.getLogger(__name__)

# a row of a matrix over T, one entry per generator of the target module
Row = t.List[NCPoly]


def matmul(left: t.Sequence[Row], right: t.Sequence[Row], zero: NCPoly) -> t.List[Row]:
    """Product of two matrices with polynomial entries."""
    width = len(right[0]) if right else 0
    result = []
    for row in left:
        out = [zero] * width
        for entry, other in zip(row, right):
            if not entry:
                continue

            for k, value in enumerate(other):
                if value:
                    out[k] = out[k] + entry * value

        result.append(out)

    return result


class BettiTable:
    """
    `b[i, j] = dim Ext^{i,j}(K, K)` for homological degrees up to `hmax`
    and internal degrees up to `bound`.
    """
    def __repr__(self):
        return f'BettiTable(hmax={self.hmax}, bound={self.bound})'

    def __init__(self, degrees: t.Mapping[int, t.Sequence[int]], bound: int):
        self.bound = bound
        self.hmax = max(degrees)
        self._data: t.Dict[t.Tuple[int, int], int] = {}

        for i, values in degrees.items():
            for j in values:
                if j <= bound:
                    self._data[i, j] = self._data.get((i, j), 0) + 1

    def __getitem__(self, key: t.Tuple[int, int]) -> int:
        return self._data.get(key, 0)

    def row(self, i: int) -> t.List[int]:
        return [self[i, j] for j in range(self.bound + 1)]

    def support(self, i: int) -> t.List[int]:
        """Internal degrees `j` with `b[i, j] != 0`."""
        return [j for j in range(self.bound + 1) if self[i, j]]

    def total(self, i: int) -> int:
        return sum(self.row(i))

    def purity(self) -> t.Optional[int]:
        """
        The `N` of an N-Koszul shape, when the table has one.

        Returns 2 when every `b[i, j]` sits on `j = i`, `N > 2` when the
        supports are `(0, 1, N, N + 1, ...)` and None otherwise.
        """
        if self.support(0) != [0] or self.support(1) not in ([1], []):
            return None

        second = self.support(2)
        if not second:
            return 2

        if len(second) != 1:
            return None

        step = second[0]
        for i in range(3, self.hmax + 1):
            expected = (i // 2) * step + (i % 2)
            support = self.support(i)
            if support and support != [expected]:
                return None

        return step

    def is_pure(self) -> bool:
        return self.purity() is not None

    def to_dict(self):
        return {
            str(i): {
                str(j): self[i, j]
                for j in self.support(i)
            }
            for i in range(self.hmax + 1)
        }


class ResolutionData:
    """
    The start of a minimal graded free resolution of `K` over `A`.

    `degrees[n]` lists the generator degrees of `Q^n` (the shifts are their
    negatives) and `matrices[n]` the rows of `M_n`, polynomial entries over
    `T` with `M_n[i][j]` homogeneous of degree `degrees[n][i] - degrees[n-1][j]`.
    """
    def __repr__(self):
        ranks = {n: len(d) for n, d in self.degrees.items()}
        return f'ResolutionData(ranks={ranks}, bound={self.bound})'

    def __init__(
        self,
        algebra: GradedAlgebra,
        bound: int,
        degrees: t.Dict[int, t.List[int]],
        matrices: t.Dict[int, t.List[Row]]
    ):
        self.algebra = algebra
        self.bound = bound
        self.degrees = degrees
        self.matrices = matrices
        self.betti = BettiTable(degrees, bound)

    @property
    def hmax(self) -> int:
        return max(self.degrees)

    def shifts(self, n: int) -> t.List[int]:
        """`(m_{1,n}, ..., m_{t_n,n})`, stored nonpositive."""
        return [-d for d in self.degrees.get(n, [])]

    def rank(self, n: int) -> int:
        return len(self.degrees.get(n, []))

    def matrix(self, n: int) -> t.List[Row]:
        return self.matrices.get(n, [])

    def product(self, n: int) -> t.List[Row]:
        """`M_n M_{n-1}` computed in `T`."""
        return matmul(self.matrix(n), self.matrix(n - 1), self.algebra.ring.zero)

    def check(self) -> t.List[str]:
        """Structural problems found, empty for a valid resolution."""
        problems = []
        algebra = self.algebra

        for i, row in enumerate(self.product(2)):
            if row[0] != algebra.relations[i]:
                problems.append(f'M2 M1 row {i} is {row[0]}, not the relation')

        for n in range(2, self.hmax + 1):
            for i, row in enumerate(self.product(n)):
                for k, entry in enumerate(row):
                    if entry.degree <= self.bound and algebra.reduce(entry):
                        problems.append(f'M{n} M{n - 1} entry ({i}, {k}) is not in <R>')

        for n, rows in self.matrices.items():
            for i, row in enumerate(rows):
                for k, entry in enumerate(row):
                    if entry and entry.degree == 0:
                        problems.append(f'M{n} entry ({i}, {k}) is a nonzero scalar')

                    if entry and not entry.is_homogeneous():
                        problems.append(f'M{n} entry ({i}, {k}) is not homogeneous')

        return problems

    def to_dict(self):
        names = self.algebra.ring
        return {
            '_': 'ResolutionData',
            'bound': self.bound,
            'shifts': {str(n): self.shifts(n) for n in sorted(self.degrees)},
            'matrices': {
                str(n): [[names.format(e) for e in row] for row in rows]
                for n, rows in sorted(self.matrices.items())
            },
            'betti': self.betti.to_dict()
        }


class _Builder:
    def __init__(self, algebra: GradedAlgebra, bound: int):
        self.algebra = algebra
        self.rewrite = algebra.rewrite
        self.field = algebra.ring.field
        self.bound = bound

        self.degrees: t.Dict[int, t.List[int]] = {}
        self.matrices: t.Dict[int, t.List[Row]] = {}
        self._bases: t.Dict[t.Tuple[int, int], t.Tuple[list, dict]] = {}

    def basis(self, n: int, j: int):
        """Basis `(generator, normal word)` of `(Q^n)_j` and its index."""
        key = (n, j)
        if key not in self._bases:
            elements = [
                (i, word)
                for i, d in enumerate(self.degrees[n])
                if d <= j
                for word in self.rewrite.normal_words(j - d)
            ]
            self._bases[key] = (elements, {e: k for k, e in enumerate(elements)})

        return self._bases[key]

    def image(self, row: Row, word: Word, index: t.Dict) -> Vector:
        """Coordinates of `word * row` in a component of the target module."""
        result: Vector = {}
        nf_word = self.rewrite.nf_word
        for k, entry in enumerate(row):
            for v, c in entry.terms.items():
                for u, value in nf_word(word + v).items():
                    position = index[k, u]
                    total = result.get(position)
                    total = c * value if total is None else total + c * value
                    if total:
                        result[position] = total

                    else:
                        del result[position]

        return result

    def differential(self, n: int, j: int) -> SparseMatrix:
        """Matrix of `(Q^n)_j -> (Q^{n-1})_j`."""
        source, _ = self.basis(n, j)
        target, index = self.basis(n - 1, j)
        rows = self.matrices[n]
        return SparseMatrix.from_rows(
            [self.image(rows[i], word, index) for i, word in source],
            len(target),
            self.field
        )

    def kernel(self, n: int, j: int) -> Subspace:
        source, _ = self.basis(n, j)
        return Subspace(len(source), self.field, self.differential(n, j).left_kernel())

    def image_of_earlier(self, n: int, j: int) -> Echelon:
        """Span of `A_+` times the generators of `Q^n` below degree `j`."""
        _, index = self.basis(n - 1, j)
        echelon = Echelon(self.field)
        for row, d in zip(self.matrices[n], self.degrees[n]):
            if d >= j:
                continue

            for word in self.rewrite.normal_words(j - d):
                echelon.add(self.image(row, word, index))

        return echelon

    def to_row(self, vector: Vector, n: int, j: int) -> Row:
        source, _ = self.basis(n, j)
        ring = self.algebra.ring
        terms: t.List[dict] = [{} for _ in self.degrees[n]]
        for position, value in vector.items():
            i, word = source[position]
            terms[i][word] = value

        return [ring.element(e) for e in terms]

    def start(self):
        ring = self.algebra.ring
        self.degrees[0] = [0]
        self.degrees[1] = [1] * len(ring.alphabet)
        self.matrices[1] = [[x] for x in ring.gens()]

    def relations_step(self):
        """`M_2` from the relations, checked degreewise to be minimal and complete."""
        algebra = self.algebra
        ring = algebra.ring
        zero = ring.zero

        rows: t.List[Row] = []
        letters = {letter: k for k, letter in enumerate(ring.letters)}
        for relation in algebra.relations:
            terms: t.List[dict] = [{} for _ in letters]
            for word, coeff in relation.terms.items():
                terms[letters[word[-1]]][word[:-1]] = coeff

            rows.append([ring.element(e) if e else zero for e in terms])

        # rows stay in relation order so that M2 M1 lists the relations
        self.degrees[2] = algebra.relation_degrees
        self.matrices[2] = rows
        for j in range(2, self.bound + 1):
            kernel = self.kernel(1, j)
            image = self.image_of_earlier(2, j)
            _, index = self.basis(1, j)

            for row, relation in zip(rows, algebra.relations):
                if relation.degree != j:
                    continue

                if not image.add(self.image(row, (), index)):
                    redundant, kept = algebra.find_redundant()
                    raise NonMinimalRelationsError(
                        [str(algebra.relations[i]) for i in redundant],
                        [str(algebra.relations[i]) for i in kept]
                    )

            if len(image) != kernel.dim:
                raise PresentationError(
                    f'relations span {len(image)} of {kernel.dim} syzygies in degree {j}'
                )

            logger.debug('step 2, degree %d: kernel %d', j, kernel.dim)

    def step(self, n: int):
        """Select minimal generators of `ker(delta_{n-1})` degree by degree."""
        self.degrees[n] = []
        self.matrices[n] = []
        for j in range(n, self.bound + 1):
            if not self.basis(n - 1, j)[0]:
                continue

            kernel = self.kernel(n - 1, j)
            image = self.image_of_earlier(n, j)
            fresh = 0
            for vector in kernel.rows:
                if image.add(vector):
                    self.matrices[n].append(self.to_row(vector, n - 1, j))
                    self.degrees[n].append(j)
                    fresh += 1

            logger.debug(
                'step %d, degree %d: kernel %d, new generators %d',
                n, j, kernel.dim, fresh
            )


def minimal_resolution(
    algebra: GradedAlgebra,
    hmax: int = 3,
    bound: t.Optional[int] = None
) -> ResolutionData:
    """
    Compute `M_1, ..., M_hmax` of a minimal resolution up to internal degree `bound`.

    Raises:
        TruncationError: `bound` exceeds the completed degree of `<R>`.
        NonMinimalRelationsError: some relation is a consequence of the others.
    """
    bound = algebra.max_degree if bound is None else bound
    if bound > algebra.rewrite.complete_to:
        raise TruncationError(bound, algebra.rewrite.complete_to, what='Groebner basis of <R>')

    if hmax < 1:
        raise ValueError('hmax must be at least 1')

    builder = _Builder(algebra, bound)
    builder.start()
    if hmax >= 2:
        builder.relations_step()

    for n in range(3, hmax + 1):
        builder.step(n)

    result = ResolutionData(algebra, bound, builder.degrees, builder.matrices)
    logger.info(
        'resolution to degree %d: %s',
        bound,
        ', '.join(f'b{n}={result.betti.total(n)}' for n in range(hmax + 1))
    )
    return result
