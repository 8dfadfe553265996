import typing as t

ERRORS: t.Dict[str, t.Type['BaseError']] = {}


class BaseError(Exception):
    """
    Base class for all custom exceptions.

    Subclasses register under a short `kind` slug, which is what reports
    serialise instead of the class name.
    """
    kind: str = 'error'

    def __init_subclass__(cls, kind: t.Optional[str] = None, **kwargs):
        super().__init_subclass__(**kwargs)
        if kind is not None:
            cls.kind = kind
            ERRORS[kind] = cls

    def to_dict(self):
        return {
            'kind': self.kind,
            'message': str(self)
        }

    @staticmethod
    def from_kind(kind: str) -> t.Type['BaseError']:
        return ERRORS.get(kind, BaseError)


class NameCollisionError(BaseError, kind='name-collision'):
    """Raised when a new generator name is already part of the alphabet."""

    def __init__(self, name: str, hint: t.Optional[str] = None):
        self.name = name
        message = f'generator name {name!r} is already in use'
        if hint:
            message = f'{message} ({hint})'

        super().__init__(message)


class ZeroPolynomialError(BaseError, kind='zero-polynomial'):
    """Raised when an operation needs a nonzero polynomial."""
    pass


class FieldError(BaseError, kind='field'):
    """Raised for an invalid coefficient field or an impossible conversion."""
    pass


class TruncationError(BaseError, kind='truncation'):
    """
    Raised when a computation needs a degree beyond the completed window.

    `needed` is the degree the caller asked for, `available` the bound
    the underlying rewrite system or resolution is complete to.
    """

    def __init__(
        self,
        needed: int,
        available: int,
        what: str = 'rewrite system'
    ):
        self.needed = needed
        self.available = available
        super().__init__(
            f'{what} is complete to degree {available}, '
            f'degree {needed} is needed (raise --max-deg to at least {needed})'
        )

    def to_dict(self):
        return {
            **super().to_dict(),
            'needed': self.needed,
            'available': self.available
        }


class TracesUnavailableError(BaseError, kind='traces-absent'):
    """Raised when cofactors are requested from a system built without traces."""

    def __init__(self):
        super().__init__(
            'cofactor traces were not recorded; complete the ideal with traces=True'
        )


class AmbientMismatchError(BaseError, kind='ambient-mismatch'):
    """Raised when two subspaces live in different coordinate spaces."""
    pass


class LinearRelationError(BaseError, kind='linear-relation'):
    """Raised when a relation has degree below 2."""

    def __init__(self, relation: str):
        self.relation = relation
        super().__init__(
            f'relation {relation!r} has degree < 2; '
            'presentations must not contain linear relations'
        )


class NonMinimalRelationsError(BaseError, kind='non-minimal'):
    """
    Raised when a relation lies in the ideal of the others at its own degree.

    `pruned` holds a minimal subset, kept in input order.
    """

    def __init__(self, redundant: t.List[str], pruned: t.List[str]):
        self.redundant = redundant
        self.pruned = pruned
        super().__init__(
            f'relation set is not minimal, redundant: {", ".join(redundant)}; '
            f'suggested relations: {"; ".join(pruned)}'
        )

    def to_dict(self):
        return {
            **super().to_dict(),
            'redundant': self.redundant,
            'pruned': self.pruned
        }


class PresentationError(BaseError, kind='presentation'):
    """Raised for a well formed file that does not describe a valid algebra."""
    pass


class PresentationSyntaxError(PresentationError, kind='syntax'):
    """Raised when a presentation file can not be parsed."""

    def __init__(
        self,
        message: str,
        line: int,
        column: t.Optional[int] = None,
        filename: str = '<string>'
    ):
        self.line = line
        self.column = column
        self.filename = filename

        where = f'{filename}:{line}'
        if column is not None:
            where += f':{column}'

        super().__init__(f'{where}: {message}')

    def to_dict(self):
        return {
            **super().to_dict(),
            'line': self.line,
            'column': self.column
        }


class ExactDivisionError(BaseError, kind='exact-division'):
    """Raised when a polynomial that must be divisible by z is not."""
    pass


class InconsistencyError(BaseError, kind='inconsistency'):
    """
    Raised when methods that must agree return different verdicts.

    This always points at a bug, never at the input.
    """

    def __init__(self, verdicts: t.Dict[str, t.Any]):
        self.verdicts = verdicts
        details = ', '.join(f'{k}={v}' for k, v in sorted(verdicts.items()))
        super().__init__(f'decisive verdicts disagree: {details}')
