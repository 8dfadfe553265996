# Polynomial expressions of presentation files:
#   expr    := sign? product (sign product)*
#   product := power ('*' power)*
#   power   := atom ('^' exponent)?
#   atom    := number | ident | '(' expr ')'
# `^` is a word power, numbers are integers or fractions `p/q`.
import typing as t
from fractions import Fraction

from arpeggio import (
    EOF,
    NoMatch,
    Optional,
    ParserPython,
    PTNodeVisitor,
    ZeroOrMore,
    visit_parse_tree
)
from arpeggio import RegExMatch as _

from ..freealg import FreeAlgebra, NCPoly
from ..errors import PresentationError, PresentationSyntaxError


def number():
    return _(r'\d+(/\d+)?')


def ident():
    return _(r'[A-Za-z_][A-Za-z_0-9]*')


def exponent():
    return _(r'\d+')


def sign():
    return _(r'[+-]')


def group():
    return '(', expr, ')'


def atom():
    return [number, ident, group]


def power():
    return atom, Optional('^', exponent)


def product():
    return power, ZeroOrMore('*', power)


def signed():
    return sign, product


def expr():
    return Optional(sign), product, ZeroOrMore(signed)


def polynomial():
    return expr, EOF


class PolyVisitor(PTNodeVisitor):
    """Build an `NCPoly` of `ring` bottom-up from a parse tree."""

    def __init__(self, ring: FreeAlgebra, **kwargs):
        super().__init__(**kwargs)
        self.ring = ring

    @staticmethod
    def _polys(children) -> t.List[NCPoly]:
        return [e for e in children if isinstance(e, NCPoly)]

    def visit_number(self, node, children):
        numerator, _, denominator = node.value.partition('/')
        if denominator and int(denominator) == 0:
            raise PresentationError(f'division by zero in {node.value!r}')

        return self.ring.scalar(Fraction(int(numerator), int(denominator or 1)))

    def visit_ident(self, node, children):
        return self.ring.gen(node.value)

    def visit_exponent(self, node, children):
        return int(node.value)

    def visit_sign(self, node, children):
        return node.value

    def visit_group(self, node, children):
        return self._polys(children)[0]

    def visit_atom(self, node, children):
        return self._polys(children)[0]

    def visit_power(self, node, children):
        base = self._polys(children)[0]
        exponents = [e for e in children if isinstance(e, int)]
        return base ** exponents[0] if exponents else base

    def visit_product(self, node, children):
        result = self.ring.one
        for factor in self._polys(children):
            result = result * factor

        return result

    def visit_signed(self, node, children):
        value = self._polys(children)[0]
        negate = any(isinstance(e, str) and e == '-' for e in children)
        return -value if negate else value

    def visit_expr(self, node, children):
        result = self.ring.zero
        negate = False
        for child in children:
            if isinstance(child, str):
                negate = child == '-'

            elif isinstance(child, NCPoly):
                result = result - child if negate else result + child
                negate = False

        return result

    def visit_polynomial(self, node, children):
        return self._polys(children)[0]


_PARSER: t.Optional[ParserPython] = None


def get_parser() -> ParserPython:
    global _PARSER
    if _PARSER is None:
        _PARSER = ParserPython(polynomial, skipws=True)

    return _PARSER


def parse_poly(
    text: str,
    ring: FreeAlgebra,
    *,
    line: int = 1,
    offset: int = 0,
    filename: str = '<string>'
) -> NCPoly:
    """
    Parse one polynomial over `ring`.

    `line` and `offset` place `text` inside its file, so errors point at
    the right column.

    Raises:
        PresentationSyntaxError: `text` is not a polynomial expression.
        PresentationError: an identifier is not a generator of `ring`.
    """
    parser = get_parser()
    try:
        tree = parser.parse(text)

    except NoMatch as exc:
        _, column = parser.pos_to_linecol(exc.position)
        expected = ', '.join(sorted({str(e) for e in exc.rules}))
        raise PresentationSyntaxError(
            f'expected {expected} in {text.strip()!r}',
            line,
            offset + column,
            filename
        ) from None

    try:
        return visit_parse_tree(tree, PolyVisitor(ring))

    except PresentationError as exc:
        raise PresentationError(f'{filename}:{line}: {exc}') from None
