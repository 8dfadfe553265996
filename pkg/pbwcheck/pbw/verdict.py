import logging
import typing as t

from .filtration import build_pk, jacobi_check
from .oracle import gr_hilbert_oracle
from ..enums import Method, Verdict
from ..gadgets.utils import Stopwatch
from ..resolution import Complexity, complexity, minimal_resolution
from ..centralext import (
    CentralExtension,
    Deformation,
    build_central_extension,
    build_hat_matrices,
    check_condition4,
    compute_f,
    regular_to_degree,
    verify_remark_corner
)
from ..errors import InconsistencyError

logger = logging.getLogger(__name__)


class MethodResult(t.NamedTuple):
    method: Method
    verdict: Verdict
    decisive: bool
    details: t.Dict[str, t.Any]
    note: t.Optional[str] = None

    def to_dict(self):
        result = {
            'verdict': self.verdict.value,
            'decisive': self.decisive,
            **self.details
        }
        if self.note:
            result['note'] = self.note

        return result


class PBWReport:
    """
    Verdicts of the selected methods on one deformation, with their windows.

    A decisive verdict is a proof at the computed window; the others are
    recorded but never outvote a decisive one.
    """
    def __repr__(self):
        return f'PBWReport(verdict={self.verdict.value!r}, unanimous={self.unanimous})'

    def __init__(
        self,
        verdict: Verdict,
        bound: int,
        complexity: Complexity,
        methods: t.Dict[Method, MethodResult],
        timings: t.Optional[t.Dict[str, float]] = None
    ):
        self.verdict = verdict
        self.bound = bound
        self.complexity = complexity
        self.methods = methods
        self.timings = timings

    @property
    def unanimous(self) -> bool:
        return len({e.verdict for e in self.methods.values()}) <= 1

    @property
    def witnesses(self) -> t.Dict[str, t.Any]:
        result = {}
        for method, value in self.methods.items():
            witness = value.details.get('witness')
            if witness:
                result[method.value] = witness

        return result

    def to_dict(self):
        result = {
            'verdict': self.verdict.value,
            'unanimous': self.unanimous,
            'window': {'N': self.bound},
            'complexity': self.complexity.to_dict(),
            'methods': {
                method.value: self.methods[method].to_dict()
                for method in Method
                if method in self.methods
            },
            'witnesses': self.witnesses
        }
        if self.timings is not None:
            result['timings'] = self.timings

        return result


def _positive(exact: bool, method: Method, note: str) -> MethodResult:
    if exact:
        return MethodResult(method, Verdict.YES, True, {})

    return MethodResult(method, Verdict.UNDETERMINED, False, {}, note)


def pbw_verdict(
    deformation: Deformation,
    bound: t.Optional[int] = None,
    methods: t.Optional[t.Iterable[Method]] = None,
    zname: str = 'z',
    timings: bool = False
) -> PBWReport:
    """
    Decide whether `deformation` is a PBW deformation of its base at degree `bound`.

    Args:
        deformation (Deformation): the filtered algebra `U` and its base `A`.
        bound (int, optional): internal degree bound `N`, the deformation's
            `max_degree` by default.
        methods (Iterable[Method], optional): methods to run, all by default.
        zname (str): name of the central variable of `D`.
        timings (bool): record the wall time of every stage.

    Raises:
        InconsistencyError: two decisive verdicts disagree, or an identity
            that holds for every input failed.
        TruncationError: `bound` is too small for a selected method.
    """
    bound = deformation.max_degree if bound is None else bound
    methods = list(Method) if methods is None else list(methods)
    watch = Stopwatch()

    with watch.lap('resolution'):
        res = minimal_resolution(deformation.base, hmax=3, bound=bound)
        cx = complexity(res)

    exact = cx.status.is_exact
    c = cx.value
    shortcut = 'c(A) = 0, only P_1 = 0 is required' if c == 0 else None
    results: t.Dict[Method, MethodResult] = {}

    extension: t.Optional[CentralExtension] = None
    if Method.REGULARITY in methods or Method.CONDITION4 in methods:
        with watch.lap('central-extension'):
            extension = build_central_extension(deformation, zname, bound)

    if Method.JACOBI in methods:
        with watch.lap(Method.JACOBI.value):
            jacobi = jacobi_check(deformation, c, cx.status, build_pk(deformation, c + 1))

        details = jacobi.to_dict()
        if jacobi.failures:
            details['witness'] = str(jacobi.failures[0].witness)
            results[Method.JACOBI] = MethodResult(Method.JACOBI, Verdict.NO, True, details)

        elif not jacobi.p1_zero:
            results[Method.JACOBI] = MethodResult(Method.JACOBI, Verdict.NO, True, details, 'P_1 != 0')

        else:
            result = _positive(
                exact,
                Method.JACOBI,
                f'no obstruction found for k <= {c}; PBW not certified'
            )
            results[Method.JACOBI] = result._replace(details=details, note=result.note or shortcut)

    if Method.REGULARITY in methods:
        with watch.lap(Method.REGULARITY.value):
            regularity = regular_to_degree(extension, c, bound)

        details = regularity.to_dict()
        if regularity.witness:
            details['witness'] = str(regularity.witness.element)
            results[Method.REGULARITY] = MethodResult(Method.REGULARITY, Verdict.NO, True, details)

        else:
            result = _positive(exact, Method.REGULARITY, f'regular on D_<={c} at the window only')
            results[Method.REGULARITY] = result._replace(details=details)

    if Method.CONDITION4 in methods:
        with watch.lap(Method.CONDITION4.value):
            f2 = compute_f(2, res, extension)
            f3 = compute_f(3, res, extension)
            condition = check_condition4(res, extension, f2, f3)
            remark = verify_remark_corner(build_hat_matrices(res, f2, f3, extension))

        if not (remark.first_zero and remark.off_corner_zero and condition.z_annihilates):
            raise InconsistencyError({
                'hat2_hat1_zero': remark.first_zero,
                'off_corner_zero': remark.off_corner_zero,
                'z_annihilates_corner': condition.z_annihilates
            })

        if bool(remark.corner) == condition.holds:
            raise InconsistencyError({
                'condition4': condition.holds,
                'corner_zero': not remark.corner
            })

        details = condition.to_dict()
        if not condition.holds:
            details['witness'] = str(condition.residuals[0][1])
            results[Method.CONDITION4] = MethodResult(Method.CONDITION4, Verdict.NO, True, details)

        else:
            result = _positive(exact, Method.CONDITION4, 'condition (4) holds for the computed M_3 only')
            results[Method.CONDITION4] = result._replace(details=details, note=result.note or shortcut)

    if Method.ORACLE in methods:
        with watch.lap(Method.ORACLE.value):
            oracle = gr_hilbert_oracle(deformation, bound)

        details = oracle.to_dict()
        if oracle.mismatches:
            details['witness'] = f'dim gr(U)_{oracle.mismatches[0]} < dim A_{oracle.mismatches[0]}'
            results[Method.ORACLE] = MethodResult(Method.ORACLE, Verdict.NO, True, details)

        elif oracle.pbw_at_window:
            results[Method.ORACLE] = MethodResult(
                Method.ORACLE, Verdict.YES, False, details, f'dimensions agree to degree {bound}'
            )

        else:
            results[Method.ORACLE] = MethodResult(
                Method.ORACLE, Verdict.UNDETERMINED, False, details, 'window too small'
            )

    decisive = {m: r.verdict for m, r in results.items() if r.decisive}
    if Verdict.YES in decisive.values() and Verdict.NO in decisive.values():
        raise InconsistencyError({m.value: v.value for m, v in decisive.items()})

    if Verdict.NO in decisive.values():
        verdict = Verdict.NO

    elif Verdict.YES in decisive.values():
        verdict = Verdict.YES

    else:
        verdict = Verdict.UNDETERMINED

    for method, result in results.items():
        logger.info(
            '%s: %s%s', method.value, result.verdict.value,
            '' if result.decisive else ' (not decisive)'
        )
        if result.verdict not in (verdict, Verdict.UNDETERMINED):
            logger.warning('%s disagrees with the decisive verdict %s', method.value, verdict.value)

    return PBWReport(verdict, bound, cx, results, watch.laps if timings else None)
