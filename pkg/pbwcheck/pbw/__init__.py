from .filtration import (
    Jacobi,
    JacobiFailure,
    Lemma41,
    PkFiltration,
    build_pk,
    homogenized_slice,
    jacobi_check,
    verify_lemma41
)
from .oracle import Oracle, gr_hilbert_oracle
from .verdict import MethodResult, PBWReport, pbw_verdict
