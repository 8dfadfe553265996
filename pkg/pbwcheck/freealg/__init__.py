from .field import Field
from .alphabet import CENTRAL, Alphabet
from .poly import (
    ExtendedNCPoly,
    FreeAlgebra,
    NCPoly,
    central_power,
    normalize_word,
    word_key
)
from .ops import (
    evaluate_central,
    extend_poly,
    filter_truncate,
    homogenize,
    top_component
)
