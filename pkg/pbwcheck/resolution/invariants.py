import math
import logging
import typing as t

from .algebra import GradedAlgebra
from .minres import ResolutionData, minimal_resolution
from ..enums import Status

logger = logging.getLogger(__name__)


class Complexity(t.NamedTuple):
    """
    `value` is `max{j : Ext^{3,j} != 0} - 1` seen to the bound.

    `entry_degree` is the top degree among the entries of `M_3 M_2`, the
    same number computed from the matrices, None when `M_3` is empty.
    """
    value: int
    status: Status
    unbounded: bool
    entry_degree: t.Optional[int]
    window: t.Tuple[int, int]
    purity: t.Optional[int] = None
    relation_degree: int = 0

    @property
    def within_relation_degree(self) -> t.Optional[bool]:
        """
        On pure input `Ext^3` is generated by `Ext^1` and `Ext^2`, so `c(A)`
        cannot exceed the top relation degree. None when the table is not pure.
        """
        if self.purity is None:
            return None

        return self.value <= self.relation_degree

    def to_dict(self):
        return {
            'value': self.value,
            'status': self.status.value,
            'unbounded_growth': self.unbounded,
            'entry_degree': self.entry_degree,
            'window': list(self.window),
            'purity': self.purity,
            'relation_degree': self.relation_degree,
            'within_relation_degree': self.within_relation_degree
        }


class EulerCheck(t.NamedTuple):
    ok: bool
    checked_upto: int
    failures: t.List[int]

    def to_dict(self):
        return {
            'ok': self.ok,
            'checked_upto': self.checked_upto,
            'failures': self.failures
        }


def trailing_window(bound: int) -> t.Tuple[int, int]:
    """The top `ceil(bound / 4)` internal degrees, as an inclusive range."""
    size = max(1, math.ceil(bound / 4))
    return bound - size + 1, bound


def complexity(res: ResolutionData) -> Complexity:
    """
    The complexity `c(A)` with an honest status.

    The value is exact only when the bound reaches `2 * maxdeg - 1`, the
    top degree where two relations can overlap and produce `Ext^3`, and
    neither new `Ext^3` nor new `Ext^2` classes appear in the trailing window
    of degrees. Otherwise it is a lower bound, flagged as unbounded growth
    when `Ext^3` is nonzero in every degree of the window.
    """
    betti = res.betti
    low, high = trailing_window(res.bound)
    third = betti.support(3)
    relation_degree = max(res.algebra.relation_degrees, default=0)

    entry_degree = None
    degrees = [
        entry.degree
        for row in res.product(3)
        for entry in row
        if entry
    ]
    if degrees:
        entry_degree = max(degrees)

    value = max(third) - 1 if third else 0
    window = range(low, high + 1)
    quiet = not any(betti[3, j] or betti[2, j] for j in window)
    settled = res.bound >= 2 * relation_degree - 1
    status = Status.EXACT if quiet and settled else Status.AT_LEAST
    unbounded = bool(third) and all(betti[3, j] for j in window)

    if entry_degree is not None and entry_degree != value:
        logger.warning(
            'complexity %d disagrees with the top entry degree %d of M3 M2',
            value, entry_degree
        )

    if not status.is_exact:
        logger.warning(
            'complexity is only known to be at least %d at degree %d%s',
            value, res.bound, ' (unbounded growth)' if unbounded else ''
        )
        if not settled:
            logger.warning(
                'bound %d is below %d, the top degree where two relations of degree %d overlap',
                res.bound, 2 * relation_degree - 1, relation_degree
            )

    purity = betti.purity()
    result = Complexity(
        value, status, unbounded, entry_degree, (low, high), purity, relation_degree
    )
    if result.within_relation_degree is False:
        logger.warning(
            'pure table with purity %d but complexity %d exceeds the top relation degree %d',
            purity, value, relation_degree
        )

    return result


def euler_check(
    algebra: GradedAlgebra,
    bound: t.Optional[int] = None,
    res: t.Optional[ResolutionData] = None
) -> EulerCheck:
    """
    Check `sum_j sum_i (-1)^i b[i, j] dim A_{d-j} = [d == 0]` for small `d`.

    The identity uses homological degrees up to 3 only, so it is tested for
    `d` below the first degree where a fourth step generator appears, found
    with a resolution computed one step further.
    """
    bound = algebra.max_degree if bound is None else bound
    if res is None or res.hmax < 4 or res.bound < bound:
        res = minimal_resolution(algebra, hmax=4, bound=bound)

    betti = res.betti
    fourth = betti.support(4)
    upto = min(fourth) - 1 if fourth else bound
    dims = algebra.hilbert(upto)

    failures = []
    for d in range(upto + 1):
        total = 0
        for j in range(d + 1):
            euler = sum((-1) ** i * betti[i, j] for i in range(4))
            total += euler * dims[d - j]

        if total != (1 if d == 0 else 0):
            failures.append(d)

    return EulerCheck(not failures, upto, failures)
