import sys
import logging
import argparse
import typing as t

from .parser import PresentationFile, load
from .report import Report, render_json, render_text
from ..about import __version__
from ..enums import Method, Verdict
from ..gadgets.utils import env
from ..resolution import GradedAlgebra, complexity, euler_check, minimal_resolution
from ..centralext import (
    Deformation,
    build_central_extension,
    export_presentation,
    regular_to_degree
)
from ..pbw import pbw_verdict
from ..errors import BaseError

logger = logging.getLogger(__name__)

COMMANDS = (
    'hilbert',
    'resolution',
    'complexity',
    'central-ext',
    'regularity',
    'pbw-check'
)


class Context(t.NamedTuple):
    source: PresentationFile
    target: t.Union[GradedAlgebra, Deformation]
    bound: int
    central: str

    @property
    def algebra(self) -> GradedAlgebra:
        target = self.target
        return target.base if isinstance(target, Deformation) else target

    @property
    def deformation(self) -> Deformation:
        target = self.target
        if isinstance(target, Deformation):
            return target

        # a graded algebra is its own trivial deformation
        return Deformation(target.ring, target.relations, target.max_degree, base=target)


def _context(args: argparse.Namespace) -> Context:
    source = load(args.file)
    bound = args.max_deg
    if bound is None:
        bound = source.max_degree or env('PBWCHECK_MAX_DEG', 10, int)

    central = args.central or source.central or env('PBWCHECK_CENTRAL', 'z')
    target = source.build(bound, args.strict)
    return Context(source, target, bound, central)


def _hilbert(ctx: Context, args) -> Report:
    return Report('hilbert', {
        'input': ctx.source,
        'bound': ctx.bound,
        'hilbert': ctx.algebra.hilbert(ctx.bound)
    })


def _resolution(ctx: Context, args) -> Report:
    res = minimal_resolution(ctx.algebra, hmax=args.hmax, bound=ctx.bound)
    data = res.to_dict()
    data['betti'] = res.betti
    data['purity'] = res.betti.purity()
    data['problems'] = res.check()
    return Report('resolution', {'input': ctx.source, **data})


def _complexity(ctx: Context, args) -> Report:
    res = minimal_resolution(ctx.algebra, hmax=3, bound=ctx.bound)
    cx = complexity(res)
    data = {
        'input': ctx.source,
        'bound': ctx.bound,
        'complexity': cx,
        'betti': res.betti,
        'purity': res.betti.purity()
    }
    if args.euler:
        data['euler'] = euler_check(ctx.algebra, ctx.bound)

    return Report('complexity', data)


def _central_ext(ctx: Context, args) -> Report:
    extension = build_central_extension(ctx.deformation, ctx.central, ctx.bound)
    return Report('central-ext', {
        'input': ctx.source,
        'extension': extension,
        'dimensions': [extension.dimension(k) for k in range(ctx.bound + 1)],
        'presentation': export_presentation(extension)
    })


def _regularity(ctx: Context, args) -> Report:
    p = args.p
    data = {'input': ctx.source}
    if p is None:
        cx = complexity(minimal_resolution(ctx.algebra, hmax=3, bound=ctx.bound))
        data['complexity'] = cx
        p = cx.value

    extension = build_central_extension(ctx.deformation, ctx.central, ctx.bound)
    regularity = regular_to_degree(extension, p, ctx.bound)
    data['regularity'] = regularity
    return Report('regularity', data, 0 if regularity.regular else 1)


def _pbw_check(ctx: Context, args) -> Report:
    methods = []
    for value in args.method:
        for method in Method.parse(value):
            if method not in methods:
                methods.append(method)

    report = pbw_verdict(
        ctx.deformation,
        ctx.bound,
        methods=methods,
        zname=ctx.central,
        timings=args.timings
    )
    data = {'input': ctx.source, **report.to_dict()}
    return Report('pbw-check', data, 1 if report.verdict is Verdict.NO else 0)


_HANDLERS: t.Dict[str, t.Callable[[Context, argparse.Namespace], Report]] = {
    'hilbert': _hilbert,
    'resolution': _resolution,
    'complexity': _complexity,
    'central-ext': _central_ext,
    'regularity': _regularity,
    'pbw-check': _pbw_check
}


def run(command: str, args: argparse.Namespace) -> Report:
    """
    Run one command on the presentation file `args.file`.

    Raises:
        BaseError: any failure of parsing or of the computation.
    """
    if command not in _HANDLERS:
        raise ValueError(f'unknown command: {command!r}')

    return _HANDLERS[command](_context(args), args)


def _method(value: str) -> str:
    Method.parse(value)
    return value


def _step(value: str) -> int:
    step = int(value)
    if step < 1:
        raise argparse.ArgumentTypeError(f'homological step must be at least 1, not {step}')

    return step


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='pbwcheck',
        description='PBW deformation checks for graded algebras of finite presentation.'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('file', help='presentation file (rel lines or def lines)')
    common.add_argument(
        '--max-deg',
        type=int,
        default=None,
        help='internal degree bound N (default: option max_deg, then $PBWCHECK_MAX_DEG or 10)'
    )
    common.add_argument('--central', default=None, help='name of the central variable (default: z)')
    common.add_argument('--strict', action='store_true', help='reject non-minimal relation sets')
    common.add_argument('--out', default=None, help='write the report to this path')
    common.add_argument('--text', action='store_true', help='human readable report')
    common.add_argument('-v', '--verbose', action='count', default=0, help='more logging on stderr')

    commands = parser.add_subparsers(dest='command', required=True)
    commands.add_parser('hilbert', parents=[common], help='Hilbert function of A')

    resolution = commands.add_parser('resolution', parents=[common], help='minimal resolution of K over A')
    resolution.add_argument('--hmax', type=_step, default=3, help='last homological step (default: 3)')

    complexity_ = commands.add_parser('complexity', parents=[common], help='complexity c(A)')
    complexity_.add_argument('--euler', action='store_true', help='cross-check the Hilbert series')

    commands.add_parser('central-ext', parents=[common], help='central extension D of a deformation')

    regularity = commands.add_parser('regularity', parents=[common], help='z-regularity of D')
    regularity.add_argument('--p', type=int, default=None, help='degree to check to (default: c(A))')

    check = commands.add_parser('pbw-check', parents=[common], help='decide the PBW property')
    check.add_argument(
        '--method',
        action='append',
        type=_method,
        default=None,
        help='jacobi, regularity, condition4, oracle or all (repeatable, default: all)'
    )
    check.add_argument('--timings', action='store_true', help='include wall times in the report')
    return parser


def _configure_logging(verbose: int):
    if verbose >= 2:
        level = logging.DEBUG

    elif verbose == 1:
        level = logging.INFO

    else:
        level = env('PBWCHECK_LOG_LEVEL', 'WARNING').upper()

    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s'
    )


def main(argv: t.Optional[t.Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == 'pbw-check' and args.method is None:
        args.method = ['all']

    _configure_logging(args.verbose)

    try:
        report = run(args.command, args)

    except BaseError as exc:
        print(f'error[{exc.kind}]: {exc}', file=sys.stderr)
        return 2

    except OSError as exc:
        print(f'error[io]: {exc}', file=sys.stderr)
        return 2

    except ValueError as exc:
        print(f'error[value]: {exc}', file=sys.stderr)
        return 2

    output = render_text(report) if args.text else render_json(report)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as file:
            file.write(output)

    else:
        sys.stdout.write(output)

    return report.exit_code
