import typing as t

from .alphabet import CENTRAL
from .poly import ExtendedNCPoly, FreeAlgebra, NCPoly
from ..alias import CentralValue
from ..errors import ZeroPolynomialError


def homogenize(
    f: NCPoly,
    zname: t.Union[str, FreeAlgebra] = 'z'
) -> ExtendedNCPoly:
    """
    Homogenize `f` with a new central variable.

    Every component `f_i` is padded to `z^(p - i) * f_i` where `p` is the
    top degree of `f`.

    Args:
        f (NCPoly): a nonzero polynomial of a ring without central variable.
        zname (str | FreeAlgebra): the central variable name, or the already
            extended ring to build the result in.

    Raises:
        NameCollisionError: `zname` is a generator of `f`'s alphabet.
        ZeroPolynomialError: `f` is zero.

    Example:
        >>> homogenize(x * y + x + 1)
        x*y + z*x + z^2
    """
    if not f:
        raise ZeroPolynomialError('can not homogenize the zero polynomial')

    if isinstance(zname, FreeAlgebra):
        ring = zname

    else:
        ring = f.ring.extend(zname)

    top = f.degree
    return ring.element({
        (CENTRAL,) * (top - len(word)) + word: coeff
        for word, coeff in f.terms.items()
    })


def extend_poly(f: NCPoly, ring: FreeAlgebra) -> ExtendedNCPoly:
    """Embed a polynomial of `T` into `T[z]` without homogenizing."""
    return ring.element(dict(f.terms))


def evaluate_central(g: NCPoly, at: CentralValue) -> NCPoly:
    """Set the central variable to 0 or 1, landing in the base ring."""
    ring = g.ring.base()
    if not g.ring.central:
        return g

    if at == 0:
        return ring.element({
            word: coeff
            for word, coeff in g.terms.items()
            if CENTRAL not in word
        })

    if at == 1:
        return ring.element({
            tuple(e for e in word if e != CENTRAL): coeff
            for word, coeff in g.terms.items()
        })

    raise ValueError(f'the central variable can only be evaluated at 0 or 1, not {at!r}')


def top_component(f: NCPoly) -> NCPoly:
    return f.top_component()


def filter_truncate(f: NCPoly, k: int) -> NCPoly:
    return f.truncate(k)
