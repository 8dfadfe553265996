from .algebra import GradedAlgebra, graded_basis, hilbert
from .minres import BettiTable, ResolutionData, Row, matmul, minimal_resolution
from .invariants import Complexity, EulerCheck, complexity, euler_check, trailing_window
