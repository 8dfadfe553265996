from .matrix import SparseMatrix, Vector, kernel_basis, rref
from .subspace import Echelon, Subspace, intersect, member, subspace_sum
from .coordinates import WordBasis
