from .reducer import Reducer
from .system import Cofactor, RewriteSystem, normal_form, reduce_with_cofactors
from .completion import complete, overlaps
