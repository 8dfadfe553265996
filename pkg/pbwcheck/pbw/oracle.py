import logging
import typing as t

from ..rewrite import complete
from ..centralext import Deformation

logger = logging.getLogger(__name__)


class Oracle(t.NamedTuple):
    """
    Dimensions of `gr(U)` against `A` up to degree `bound`.

    `injectivity` is the largest `p` with `dim gr(U)_k = dim A_k` for every
    `k <= p`. Only `mismatches`, degrees where `gr(U)` is smaller, are
    conclusive; an excess only says the window is too small.
    """
    gr_dims: t.List[int]
    dims: t.List[int]
    injectivity: int
    mismatches: t.List[int]
    excess: t.List[int]
    bound: int

    @property
    def pbw_at_window(self) -> bool:
        return self.injectivity >= self.bound - 1 and not self.mismatches

    def to_dict(self):
        return {
            'gr_dims': self.gr_dims,
            'dims': self.dims,
            'injectivity_degree': self.injectivity,
            'mismatches': self.mismatches,
            'excess': self.excess,
            'pbw_at_window': self.pbw_at_window
        }


def gr_hilbert_oracle(deformation: Deformation, bound: t.Optional[int] = None) -> Oracle:
    """
    Count the normal words of a Groebner basis of `<P>` by degree.

    Leading words of a basis of the filtered ideal span the leading ideal
    of `gr(U)`, and `Phi: A -> gr(U)` is onto, so `dim gr(U)_k <= dim A_k`
    with equality up to `p` exactly when `Phi` is injective there.

    Raises:
        TruncationError: `bound` exceeds the degree `A` is complete to.
    """
    bound = deformation.max_degree if bound is None else bound
    dims = deformation.base.hilbert(bound)

    system = complete(deformation.relations, bound, ring=deformation.ring)
    gr_dims = [system.dimension(k) for k in range(bound + 1)]

    mismatches = [k for k in range(bound + 1) if gr_dims[k] < dims[k]]
    excess = [k for k in range(bound + 1) if gr_dims[k] > dims[k]]

    injectivity = bound
    for k in range(bound + 1):
        if gr_dims[k] != dims[k]:
            injectivity = k - 1
            break

    if excess:
        logger.warning('gr(U) counts exceed dim A in degrees %s, raise the bound', excess)

    return Oracle(gr_dims, dims, injectivity, mismatches, excess, bound)
