from .deformation import Deformation
from .extension import (
    CentralExtension,
    Regularity,
    ZeroDivisor,
    build_central_extension,
    export_presentation,
    regular_to_degree
)
from .hat import (
    Condition4,
    HatData,
    RemarkCorner,
    build_hat_matrices,
    check_condition4,
    compute_f,
    corner,
    verify_remark_corner
)
