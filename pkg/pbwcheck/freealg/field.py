import typing as t
from fractions import Fraction

from sympy import QQ, GF
from sympy.ntheory import isprime

from ..errors import FieldError

Number = t.Union[int, Fraction]


class Field:
    """
    An exact coefficient field: the rationals or a prime field.

    Elements are sympy polys-domain elements (`QQ` or `GF(p)`), so every
    operation is exact and the same values feed `DomainMatrix` directly.
    """
    def __repr__(self):
        return f'Field({self.name!r})'

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.characteristic == other.characteristic
        )

    def __hash__(self):
        return hash(('Field', self.characteristic))

    def __init__(self, characteristic: int = 0):
        if characteristic == 0:
            domain = QQ

        else:
            if characteristic < 2 or not isprime(characteristic):
                raise FieldError(
                    f'GF needs a prime modulus, got {characteristic}'
                )

            domain = GF(characteristic)

        self.domain = domain
        self.characteristic = characteristic

        self.zero = domain.zero
        self.one = domain.one

    @classmethod
    def rational(cls):
        return cls(0)

    @classmethod
    def prime(cls, p: int):
        return cls(p)

    @property
    def name(self) -> str:
        if self.characteristic == 0:
            return 'Q'

        return f'GF {self.characteristic}'

    @property
    def is_prime_field(self):
        return self.characteristic != 0

    def convert(self, value: t.Any):
        """Convert an int, `Fraction` or domain element into this field."""
        if isinstance(value, bool):
            raise FieldError(f'can not convert {value!r} into {self.name}')

        if isinstance(value, int):
            return self.domain(value)

        if isinstance(value, Fraction):
            denominator = self.domain(value.denominator)
            if not denominator:
                raise FieldError(
                    f'{value} has a denominator divisible by {self.characteristic}'
                )

            return self.domain(value.numerator) / denominator

        if self.characteristic == 0:
            numerator = getattr(value, 'numerator', None)
            denominator = getattr(value, 'denominator', None)

            if numerator is not None and denominator is not None:
                return self.domain(int(numerator), int(denominator))

        else:
            try:
                return self.domain(int(value) % self.characteristic)

            except (TypeError, ValueError):
                pass

        raise FieldError(f'can not convert {value!r} into {self.name}')

    def to_fraction(self, value) -> Fraction:
        """Canonical representative, residues are taken in `[0, p)`."""
        if self.characteristic == 0:
            return Fraction(int(value.numerator), int(value.denominator))

        return Fraction(int(value) % self.characteristic)

    def format(self, value) -> str:
        """Render a coefficient, prime field residues in the symmetric range."""
        if self.characteristic == 0:
            return str(self.to_fraction(value))

        residue = int(value) % self.characteristic
        if residue > self.characteristic // 2:
            residue -= self.characteristic

        return str(residue)

    def is_one(self, value) -> bool:
        return value == self.one

    def is_minus_one(self, value) -> bool:
        return value == -self.one
