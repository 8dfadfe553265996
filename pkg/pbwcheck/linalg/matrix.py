import typing as t

from sympy.polys.matrices.sdm import (
    sdm_irref,
    sdm_nullspace_from_rref,
    sdm_transpose
)

from ..freealg import Field

# sparse row: column index -> nonzero field element
Vector = t.Dict[int, t.Any]


def clean(vector: t.Mapping[int, t.Any]) -> Vector:
    return {k: v for k, v in vector.items() if v}


def add_scaled(target: Vector, source: t.Mapping[int, t.Any], factor) -> Vector:
    """In place `target += factor * source`, dropping cancelled entries."""
    for key, value in source.items():
        current = target.get(key)
        value = factor * value if current is None else current + factor * value
        if value:
            target[key] = value

        else:
            target.pop(key, None)

    return target


class SparseMatrix:
    """
    A matrix over an exact field with dict-of-dicts row storage.

    Rows are vectors (the row-vector convention): a module map is applied by
    right multiplication, and `left_kernel` is the kernel of that map.
    """
    def __repr__(self):
        return f'SparseMatrix(shape={self.shape}, nnz={self.nnz}, field={self.field.name})'

    def __init__(
        self,
        rows: t.Mapping[int, t.Mapping[int, t.Any]],
        shape: t.Tuple[int, int],
        field: Field
    ):
        self.shape = shape
        self.field = field
        self.rows: t.Dict[int, Vector] = {}

        for index, row in rows.items():
            row = clean(row)
            if row:
                self.rows[index] = row

    @classmethod
    def from_rows(
        cls,
        vectors: t.Sequence[t.Mapping[int, t.Any]],
        ncols: int,
        field: Field
    ):
        return cls(dict(enumerate(vectors)), (len(vectors), ncols), field)

    @classmethod
    def identity(cls, size: int, field: Field):
        return cls({i: {i: field.one} for i in range(size)}, (size, size), field)

    @property
    def nrows(self):
        return self.shape[0]

    @property
    def ncols(self):
        return self.shape[1]

    @property
    def nnz(self):
        return sum(map(len, self.rows.values()))

    def row(self, index: int) -> Vector:
        return dict(self.rows.get(index, {}))

    def to_list(self) -> t.List[t.List[t.Any]]:
        zero = self.field.zero
        return [
            [self.rows.get(i, {}).get(j, zero) for j in range(self.ncols)]
            for i in range(self.nrows)
        ]

    def transpose(self) -> 'SparseMatrix':
        return SparseMatrix(
            sdm_transpose(self.rows),
            (self.ncols, self.nrows),
            self.field
        )

    def vecmul(self, vector: t.Mapping[int, t.Any]) -> Vector:
        """Row vector times matrix."""
        result: Vector = {}
        for index, value in vector.items():
            row = self.rows.get(index)
            if row:
                add_scaled(result, row, value)

        return result

    def matmul(self, other: 'SparseMatrix') -> 'SparseMatrix':
        if self.ncols != other.nrows:
            raise ValueError(f'shape mismatch: {self.shape} @ {other.shape}')

        return SparseMatrix(
            {i: other.vecmul(row) for i, row in self.rows.items()},
            (self.nrows, other.ncols),
            self.field
        )

    __matmul__ = matmul

    def rref(self) -> t.Tuple['SparseMatrix', t.Tuple[int, ...]]:
        """Reduced row echelon form and the pivot columns."""
        if not self.rows:
            return SparseMatrix({}, self.shape, self.field), ()

        reduced, pivots, _ = sdm_irref(self.rows)
        return SparseMatrix(reduced, self.shape, self.field), tuple(pivots)

    @property
    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> t.List[Vector]:
        """Basis of `{v : M v = 0}`, one vector per non-pivot column."""
        if not self.rows:
            return [{j: self.field.one} for j in range(self.ncols)]

        reduced, pivots, nonzero_cols = sdm_irref(self.rows)
        basis, _ = sdm_nullspace_from_rref(
            reduced,
            self.field.one,
            self.ncols,
            pivots,
            nonzero_cols
        )
        return [clean(v) for v in basis]

    def left_kernel(self) -> t.List[Vector]:
        """Basis of `{v : v M = 0}`."""
        return self.transpose().nullspace()


def rref(matrix: SparseMatrix) -> t.Tuple[SparseMatrix, int]:
    reduced, pivots = matrix.rref()
    return reduced, len(pivots)


def kernel_basis(matrix: SparseMatrix):
    """The left kernel of `matrix` as a subspace of its row space coordinates."""
    from .subspace import Subspace

    return Subspace(matrix.nrows, matrix.field, matrix.left_kernel())
