import logging
import typing as t

from .extension import CentralExtension
from ..freealg import ExtendedNCPoly
from ..resolution import ResolutionData, matmul
from ..errors import ExactDivisionError, InconsistencyError, TruncationError

logger = logging.getLogger(__name__)

FRow = t.List[ExtendedNCPoly]


def _sign(n: int) -> int:
    """`(-1)^(n-1)`"""
    return 1 if n % 2 else -1


def _lift_rows(rows, extension: CentralExtension) -> t.List[FRow]:
    return [[extension.lift(e) for e in row] for row in rows]


def compute_f(n: int, res: ResolutionData, extension: CentralExtension) -> t.List[FRow]:
    """
    The matrix `f_n` with `pi_D(M_n M_{n-1} - (-1)^(n-1) z f_n) = 0`.

    Every entry `e` of `M_n M_{n-1}` lies in `<R>`. Writing it as
    `sum c u r_i w`, the same sum with `h(r_i + l_i)` in place of `r_i`
    is a lift `X` of `e` to `<h(P)>`, and `f_n = (-1)^(n-1) (e - X) / z`.
    For `n = 2` the lift is the relation itself.

    Raises:
        ExactDivisionError: a lift is not congruent to `e` modulo `z`.
        InconsistencyError: the defining identity or the entry degrees fail.
    """
    if n not in (2, 3):
        raise ValueError(f'f_n is only built for n = 2, 3, not {n}')

    sign = _sign(n)
    ring = extension.ring
    homogenized = extension.relations

    if n == 2:
        product = [[relation] for relation in res.algebra.relations]
        lifts = [[e] for e in homogenized]

    else:
        product = res.product(3)
        traced = res.algebra.traced()
        lifts = []
        for row in product:
            out = []
            for entry in row:
                lift = ring.zero
                if entry:
                    remainder, cofactors = traced.reduce_with_cofactors(entry)
                    if remainder:
                        raise ExactDivisionError(f'entry {entry} of M3 M2 is not in <R>')

                    for c in cofactors:
                        lift = lift + homogenized[c.index].sandwich(c.left, c.right, c.coeff)

                out.append(lift)

            lifts.append(out)

    result: t.List[FRow] = []
    for row, lift_row in zip(product, lifts):
        result.append([
            (extension.lift(e) - x).divide_central() * sign
            for e, x in zip(row, lift_row)
        ])

    _verify_f(n, res, extension, product, result)
    return result


def _verify_f(n, res, extension, product, f):
    sign = _sign(n)
    z = extension.z
    failures = {}
    upper = res.degrees[n]
    lower = res.degrees[n - 2]
    for i, (row, f_row) in enumerate(zip(product, f)):
        for j, (entry, value) in enumerate(zip(row, f_row)):
            if extension.reduce(extension.lift(entry) - z * value * sign):
                failures[f'f{n}[{i},{j}] identity'] = str(value)

            if value and (not value.is_homogeneous() or value.degree != upper[i] - lower[j] - 1):
                failures[f'f{n}[{i},{j}] degree'] = value.degree

    if failures:
        raise InconsistencyError(failures)


class Condition4(t.NamedTuple):
    """`pi_D(M_3 f_2 + f_3 M_1)`, row by row."""
    holds: bool
    residuals: t.List[t.Tuple[int, ExtendedNCPoly]]
    z_annihilates: bool
    degrees: t.List[int]

    def to_dict(self):
        return {
            'holds': self.holds,
            'residuals': [{'row': i, 'value': str(e)} for i, e in self.residuals],
            'z_annihilates': self.z_annihilates
        }


def corner(res: ResolutionData, extension: CentralExtension, f2, f3) -> t.List[ExtendedNCPoly]:
    """Entries of `M_3 f_2 + f_3 M_1` in `T[z]`."""
    zero = extension.ring.zero
    m3 = _lift_rows(res.matrix(3), extension)
    m1 = _lift_rows(res.matrix(1), extension)
    first = matmul(m3, f2, zero)
    second = matmul(f3, m1, zero)
    return [a[0] + b[0] for a, b in zip(first, second)]


def check_condition4(
    res: ResolutionData,
    extension: CentralExtension,
    f2: t.Optional[t.List[FRow]] = None,
    f3: t.Optional[t.List[FRow]] = None
) -> Condition4:
    """
    Reduce every entry of `M_3 f_2 + f_3 M_1` in `D`.

    Entry `i` is homogeneous of degree `-1 - m_{i,3}`; with `M_3` empty
    the condition holds trivially.

    Raises:
        TruncationError: `D` is not complete to the top entry degree.
    """
    degrees = [d - 1 for d in res.degrees.get(3, [])]
    if not degrees:
        return Condition4(True, [], True, [])

    needed = max(degrees) + 1
    if needed > extension.rewrite.complete_to:
        raise TruncationError(needed, extension.rewrite.complete_to, what='rewrite system of D')

    f2 = compute_f(2, res, extension) if f2 is None else f2
    f3 = compute_f(3, res, extension) if f3 is None else f3

    residuals = []
    z_annihilates = True
    for i, (entry, degree) in enumerate(zip(corner(res, extension, f2, f3), degrees)):
        if entry and entry.degree != degree:
            raise InconsistencyError({f'corner[{i}] degree': entry.degree, 'expected': degree})

        reduced = extension.reduce(entry)
        if reduced:
            residuals.append((i, reduced))
            if extension.reduce(extension.z * reduced):
                z_annihilates = False

    logger.info('condition (4): %d nonzero residuals', len(residuals))
    return Condition4(not residuals, residuals, z_annihilates, degrees)


class HatData:
    """
    `f_2, f_3` and the block matrices of `Q_hat`, the candidate resolution over `D`.

    `matrices[n]` is `(M_1; z)` for `n = 1` and
    `[[M_n, f_n], [(-1)^(n-1) z I, M_{n-1}]]` for `n = 2, 3`.
    """
    def __repr__(self):
        ranks = {n: len(rows) for n, rows in self.matrices.items()}
        return f'HatData(ranks={ranks})'

    def __init__(self, extension, f2, f3, matrices, degrees):
        self.extension = extension
        self.f2 = f2
        self.f3 = f3
        self.matrices: t.Dict[int, t.List[FRow]] = matrices
        self.degrees: t.Dict[int, t.List[int]] = degrees

    def to_dict(self):
        fmt = self.extension.ring.format
        return {
            '_': 'HatData',
            'f2': [[fmt(e) for e in row] for row in self.f2],
            'f3': [[fmt(e) for e in row] for row in self.f3],
            'shifts': {str(n): [-d for d in ds] for n, ds in self.degrees.items()}
        }


def build_hat_matrices(
    res: ResolutionData,
    f2: t.List[FRow],
    f3: t.List[FRow],
    extension: CentralExtension
) -> HatData:
    ring = extension.ring
    zero = ring.zero
    z = extension.z

    blocks = {n: _lift_rows(res.matrix(n), extension) for n in range(1, 4)}
    f = {2: f2, 3: f3}

    matrices = {1: blocks[1] + [[z]]}
    degrees = {0: [0], 1: res.degrees[1] + [1]}
    for n in (2, 3):
        size = res.rank(n - 1)
        upper = [m + f_row for m, f_row in zip(blocks[n], f[n])]
        lower = []
        for i in range(size):
            identity = [zero] * size
            identity[i] = z * _sign(n)
            lower.append(identity + blocks[n - 1][i])

        matrices[n] = upper + lower
        degrees[n] = res.degrees[n] + [d + 1 for d in res.degrees[n - 1]]

    return HatData(extension, f2, f3, matrices, degrees)


class RemarkCorner(t.NamedTuple):
    first_zero: bool
    off_corner_zero: bool
    corner: t.List[t.Tuple[int, ExtendedNCPoly]]

    def to_dict(self):
        return {
            'hat2_hat1_zero': self.first_zero,
            'off_corner_zero': self.off_corner_zero,
            'corner': [{'row': i, 'value': str(e)} for i, e in self.corner]
        }


def verify_remark_corner(hat: HatData) -> RemarkCorner:
    """
    Reduce `M_hat_2 M_hat_1` and `M_hat_3 M_hat_2` in `D`.

    The first vanishes by construction; the second vanishes outside the
    top right block, which is `M_3 f_2 + f_3 M_1`.
    """
    extension = hat.extension
    zero = extension.ring.zero
    reduce = extension.reduce

    first = matmul(hat.matrices[2], hat.matrices[1], zero)
    first_zero = not any(reduce(e) for row in first for e in row)

    second = matmul(hat.matrices[3], hat.matrices[2], zero)
    top = len(hat.f3)
    width = len(hat.matrices[1]) - 1

    off_corner_zero = True
    residuals = []
    for i, row in enumerate(second):
        for j, entry in enumerate(row):
            value = reduce(entry)
            if i < top and j >= width:
                if value:
                    residuals.append((i, value))

            elif value:
                off_corner_zero = False

    return RemarkCorner(first_zero, off_corner_zero, residuals)
