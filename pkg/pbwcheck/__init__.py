from .freealg import Alphabet, Field, FreeAlgebra, NCPoly
from .resolution import GradedAlgebra, minimal_resolution, complexity
from .centralext import Deformation, build_central_extension
from .pbw import pbw_verdict
