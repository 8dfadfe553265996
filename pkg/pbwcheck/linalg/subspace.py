import typing as t

from sympy.polys.matrices.sdm import sdm_irref

from .matrix import SparseMatrix, Vector, add_scaled, clean
from ..freealg import Field
from ..errors import AmbientMismatchError


class Subspace:
    """
    A subspace of `K^ambient`, stored as a reduced row echelon basis.

    Two subspaces are equal exactly when their echelon bases are equal.
    `coordinates` optionally names the ambient basis (for instance the words
    of a graded component) and is checked by every binary operation.
    """
    def __repr__(self):
        return f'Subspace(dim={self.dim}, ambient={self.ambient})'

    def __init__(
        self,
        ambient: int,
        field: Field,
        vectors: t.Iterable[t.Mapping[int, t.Any]] = (),
        coordinates: t.Optional[t.Sequence[t.Hashable]] = None
    ):
        self.ambient = ambient
        self.field = field
        self.coordinates = tuple(coordinates) if coordinates is not None else None

        rows = {}
        for vector in vectors:
            vector = clean(vector)
            if not vector:
                continue

            if max(vector) >= ambient or min(vector) < 0:
                raise AmbientMismatchError(
                    f'vector index out of range for ambient dimension {ambient}'
                )

            rows[len(rows)] = vector

        if rows:
            reduced, pivots, _ = sdm_irref(rows)
            self.pivots: t.Tuple[int, ...] = tuple(pivots)
            self.rows: t.Tuple[Vector, ...] = tuple(
                reduced[i] for i in range(len(self.pivots))
            )

        else:
            self.pivots = ()
            self.rows = ()

    @classmethod
    def zero(cls, ambient: int, field: Field, coordinates=None):
        return cls(ambient, field, (), coordinates)

    @classmethod
    def full(cls, ambient: int, field: Field, coordinates=None):
        return cls(
            ambient,
            field,
            ({i: field.one} for i in range(ambient)),
            coordinates
        )

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self):
        return self.dim

    def __bool__(self):
        return bool(self.rows)

    def basis(self) -> t.List[Vector]:
        return [dict(e) for e in self.rows]

    def _check(self, other: 'Subspace'):
        if self.ambient != other.ambient or self.field != other.field:
            raise AmbientMismatchError(
                f'ambient K^{self.ambient} over {self.field.name} does not match '
                f'K^{other.ambient} over {other.field.name}'
            )

        if (
            self.coordinates is not None
            and other.coordinates is not None
            and self.coordinates is not other.coordinates
            and self.coordinates != other.coordinates
        ):
            raise AmbientMismatchError('subspaces use different coordinate bases')

    def _like(self, vectors) -> 'Subspace':
        return Subspace(self.ambient, self.field, vectors, self.coordinates)

    def reduce(self, vector: t.Mapping[int, t.Any]) -> Vector:
        """Residue of `vector` modulo the subspace (zero iff it is a member)."""
        result = clean(vector)
        for pivot, row in zip(self.pivots, self.rows):
            value = result.get(pivot)
            if value:
                add_scaled(result, row, -value)

        return result

    def contains(self, vector: t.Mapping[int, t.Any]) -> bool:
        return not self.reduce(vector)

    __contains__ = contains

    def __add__(self, other: 'Subspace') -> 'Subspace':
        self._check(other)
        return self._like(self.rows + other.rows)

    def intersect(self, other: 'Subspace') -> 'Subspace':
        """`U & W` from the left kernel of the stacked bases `(U; W)`."""
        self._check(other)
        if not self.rows or not other.rows:
            return self._like(())

        stacked = SparseMatrix.from_rows(
            self.rows + other.rows,
            self.ambient,
            self.field
        )

        size = self.dim
        vectors = []
        for relation in stacked.left_kernel():
            vector: Vector = {}
            for index, value in relation.items():
                if index < size:
                    add_scaled(vector, self.rows[index], value)

            vectors.append(vector)

        return self._like(vectors)

    __and__ = intersect

    def issubset(self, other: 'Subspace') -> bool:
        self._check(other)
        return all(other.contains(row) for row in self.rows)

    __le__ = issubset

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented

        return (
            self.ambient == other.ambient
            and self.pivots == other.pivots
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.pivots))

    def map(self, matrix: SparseMatrix, ambient: t.Optional[int] = None) -> 'Subspace':
        """Image under right multiplication by `matrix`."""
        return Subspace(
            matrix.ncols if ambient is None else ambient,
            self.field,
            (matrix.vecmul(row) for row in self.rows)
        )


def intersect(u: Subspace, w: Subspace) -> Subspace:
    return u.intersect(w)


def member(vector: t.Mapping[int, t.Any], u: Subspace) -> bool:
    return u.contains(vector)


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    return u + w


class Echelon:
    """
    Incremental echelon basis, for picking vectors independent of a span.

    Example:
    ```python
    basis = Echelon(field)
    basis.add({0: 1})   # True
    basis.add({0: 2})   # False, already spanned
    ```
    """
    def __init__(self, field: Field, vectors: t.Iterable[t.Mapping[int, t.Any]] = ()):
        self.field = field
        self._rows: t.Dict[int, Vector] = {}
        for vector in vectors:
            self.add(vector)

    def __len__(self):
        return len(self._rows)

    def reduce(self, vector: t.Mapping[int, t.Any]) -> Vector:
        result = clean(vector)
        # eliminating pivot p only introduces keys above p
        for pivot in sorted(self._rows):
            value = result.get(pivot)
            if value:
                add_scaled(result, self._rows[pivot], -value)

        return result

    def add(self, vector: t.Mapping[int, t.Any]) -> bool:
        """Add `vector`, returning False when it was already in the span."""
        residue = self.reduce(vector)
        if not residue:
            return False

        pivot = min(residue)
        inverse = residue[pivot] ** -1
        self._rows[pivot] = {k: v * inverse for k, v in residue.items()}
        return True

    def contains(self, vector: t.Mapping[int, t.Any]) -> bool:
        return not self.reduce(vector)

    def subspace(self, ambient: int, coordinates=None) -> Subspace:
        return Subspace(ambient, self.field, self._rows.values(), coordinates)
