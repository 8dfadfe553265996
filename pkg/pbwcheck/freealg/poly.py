import itertools
import typing as t
from fractions import Fraction
from types import MappingProxyType

from .field import Field
from .alphabet import CENTRAL, Alphabet
from ..alias import Word
from ..errors import ExactDivisionError, ZeroPolynomialError


def word_key(word: Word):
    """Sort key of the degree-lexicographic monomial order."""
    return (len(word), word)


def normalize_word(word: Word) -> Word:
    """Collect every central letter at the front of `word`."""
    zeros = word.count(CENTRAL)
    if zeros == 0 or word[:zeros] == (CENTRAL,) * zeros:
        return word

    return (CENTRAL,) * zeros + tuple(e for e in word if e != CENTRAL)


def central_power(word: Word) -> int:
    """Power of the central letter of a normalized word."""
    power = 0
    for letter in word:
        if letter != CENTRAL:
            break
        power += 1

    return power


class FreeAlgebra:
    """
    The free algebra `K<x_1, ..., x_n>`, optionally with a central variable.

    A ring with a central variable is `T[z]`: every stored word is kept with
    its `z` letters collected at the front, so `z*w` and `w*z` are the same
    value.

    Example:
    ```python
    ring = FreeAlgebra(Alphabet(['x', 'y']), Field())
    x, y = ring.gens()
    print(x * y - y * x)

    >>> x*y - y*x
    ```
    """
    def __repr__(self):
        return f'FreeAlgebra({self.alphabet!r}, {self.field!r})'

    def __eq__(self, other):
        return (
            isinstance(other, FreeAlgebra)
            and self.alphabet == other.alphabet
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.alphabet, self.field))

    def __init__(self, alphabet: Alphabet, field: t.Optional[Field] = None):
        self.alphabet = alphabet
        self.field = field or Field()

    @property
    def central(self) -> bool:
        return self.alphabet.has_central

    @property
    def letters(self):
        return self.alphabet.letters

    @property
    def element_class(self) -> t.Type['NCPoly']:
        return ExtendedNCPoly if self.central else NCPoly

    def extend(self, central: str) -> 'FreeAlgebra':
        return FreeAlgebra(self.alphabet.extend(central), self.field)

    def base(self) -> 'FreeAlgebra':
        if not self.central:
            return self

        return FreeAlgebra(self.alphabet.base(), self.field)

    def concat(self, left: Word, right: Word) -> Word:
        if not self.central:
            return left + right

        if not left or not right:
            return left or right

        a = central_power(left)
        b = central_power(right)
        if a == len(left) or b == 0:
            return left + right

        return (CENTRAL,) * (a + b) + left[a:] + right[b:]

    def normalize(self, word: Word) -> Word:
        return normalize_word(word) if self.central else word

    def element(self, terms: t.Mapping[Word, t.Any]) -> 'NCPoly':
        """Build an element from domain coefficients, dropping zeros."""
        data = {}
        for word, coeff in terms.items():
            if not coeff:
                continue

            word = self.normalize(word)
            if word in data:
                coeff = data[word] + coeff
                if not coeff:
                    del data[word]
                    continue

            data[word] = coeff

        return self.element_class(self, data)

    def from_terms(
        self,
        terms: t.Iterable[t.Tuple[Word, t.Union[int, Fraction, t.Any]]]
    ) -> 'NCPoly':
        """Build an element from `(word, number)` pairs, converting numbers."""
        data = {}
        for word, coeff in terms:
            word = self.normalize(tuple(word))
            data[word] = data.get(word, self.field.zero) + self.field.convert(coeff)

        return self.element(data)

    @property
    def zero(self) -> 'NCPoly':
        return self.element_class(self, {})

    @property
    def one(self) -> 'NCPoly':
        return self.element_class(self, {(): self.field.one})

    def scalar(self, value) -> 'NCPoly':
        return self.element({(): self.field.convert(value)})

    def monomial(self, word: Word, coeff=None) -> 'NCPoly':
        if coeff is None:
            coeff = self.field.one

        return self.element({tuple(word): coeff})

    def gen(self, name: str) -> 'NCPoly':
        return self.monomial((self.alphabet.code(name),))

    def gens(self) -> t.List['NCPoly']:
        """Generators in declared order, the central variable excluded."""
        return [self.monomial((e,)) for e in self.letters]

    def central_gen(self) -> 'NCPoly':
        if not self.central:
            raise ValueError('ring has no central variable')

        return self.monomial((CENTRAL,))

    def words(self, degree: int) -> t.Iterator[Word]:
        """Every normalized word of `degree`, largest first."""
        if not self.central:
            yield from itertools.product(self.letters, repeat=degree)
            return

        for power in range(degree + 1):
            prefix = (CENTRAL,) * power
            for tail in itertools.product(self.letters, repeat=degree - power):
                yield prefix + tail

    def words_upto(self, degree: int) -> t.List[Word]:
        """Every word of degree at most `degree`, ordered by `(degree, word)`."""
        result = []
        for d in range(degree + 1):
            result.extend(sorted(self.words(d)))

        return result

    def format(self, poly: 'NCPoly') -> str:
        if not poly:
            return '0'

        field = self.field
        result = ''
        for word, coeff in poly.items():
            number = field.format(coeff)
            negative = number.startswith('-')
            if negative:
                number = number[1:]

            if not word:
                body = number

            elif number == '1':
                body = self.alphabet.format_word(word)

            else:
                body = f'{number}*{self.alphabet.format_word(word)}'

            if not result:
                result = f'-{body}' if negative else body

            else:
                result += f' - {body}' if negative else f' + {body}'

        return result


class NCPoly:
    """
    An immutable noncommutative polynomial.

    Terms map words to nonzero field elements; iteration order is
    descending in the monomial order, so the first term is the leading one.
    """
    __slots__ = ('ring', '_terms', '_sorted', '_hash')

    def __repr__(self):
        return f'{type(self).__name__}({self.ring.format(self)!r})'

    def __str__(self):
        return self.ring.format(self)

    def __init__(self, ring: FreeAlgebra, terms: t.Dict[Word, t.Any]):
        self.ring = ring
        self._terms = terms
        self._sorted: t.Optional[t.List[Word]] = None
        self._hash: t.Optional[int] = None

    def to_dict(self):
        return {
            '_': type(self).__name__,
            'value': str(self)
        }

    @property
    def terms(self) -> t.Mapping[Word, t.Any]:
        return MappingProxyType(self._terms)

    def words(self) -> t.List[Word]:
        if self._sorted is None:
            self._sorted = sorted(self._terms, key=word_key, reverse=True)

        return self._sorted

    def items(self) -> t.Iterator[t.Tuple[Word, t.Any]]:
        for word in self.words():
            yield word, self._terms[word]

    def coeff(self, word: Word):
        return self._terms.get(tuple(word), self.ring.field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.ring == other.ring and self._terms == other._terms

        if isinstance(other, (int, Fraction)):
            return self == self.ring.scalar(other)

        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))

        return self._hash

    @property
    def degree(self) -> int:
        """Top degree, `-1` for the zero polynomial."""
        return max(map(len, self._terms), default=-1)

    @property
    def lead_word(self) -> Word:
        if not self._terms:
            raise ZeroPolynomialError('the zero polynomial has no leading word')

        return self.words()[0]

    @property
    def lead_coeff(self):
        return self._terms[self.lead_word]

    def is_homogeneous(self) -> bool:
        return len(set(map(len, self._terms))) <= 1

    def _new(self, terms: t.Dict[Word, t.Any]):
        return type(self)(self.ring, terms)

    def _coerce(self, other) -> t.Optional['NCPoly']:
        if isinstance(other, NCPoly):
            if other.ring != self.ring:
                raise ValueError(f'can not mix {self.ring!r} and {other.ring!r}')
            return other

        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)

        return None

    def __neg__(self):
        return self._new({k: -v for k, v in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        terms = dict(self._terms)
        for word, coeff in other._terms.items():
            value = terms.get(word)
            if value is None:
                terms[word] = coeff

            else:
                value = value + coeff
                if value:
                    terms[word] = value

                else:
                    del terms[word]

        return self._new(terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return other + (-self)

    def scale(self, value) -> 'NCPoly':
        """Multiply by a field element."""
        if not value:
            return self._new({})

        return self._new({k: v * value for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(self.ring.field.convert(other))

        other = self._coerce(other)
        if other is None:
            return NotImplemented

        concat = self.ring.concat
        terms: t.Dict[Word, t.Any] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                word = concat(u, v)
                value = terms.get(word)
                terms[word] = a * b if value is None else value + a * b

        return self._new({k: v for k, v in terms.items() if v})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(self.ring.field.convert(other))

        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError('negative powers are not defined')

        result = self.ring.one
        for _ in range(exponent):
            result = result * self

        return result

    def sandwich(self, left: Word = (), right: Word = (), coeff=None) -> 'NCPoly':
        """Return `coeff * left * self * right`."""
        concat = self.ring.concat
        if coeff is None:
            coeff = self.ring.field.one

        return self._new({
            concat(concat(left, word), right): value * coeff
            for word, value in self._terms.items()
        })

    def monic(self) -> 'NCPoly':
        if not self._terms:
            raise ZeroPolynomialError('can not normalise the zero polynomial')

        return self.scale(self.lead_coeff ** -1)

    def component(self, degree: int) -> 'NCPoly':
        """Homogeneous component of `degree`."""
        return self._new({
            k: v
            for k, v in self._terms.items()
            if len(k) == degree
        })

    def components(self) -> t.Dict[int, 'NCPoly']:
        return {
            degree: self.component(degree)
            for degree in sorted(set(map(len, self._terms)))
        }

    def top_component(self) -> 'NCPoly':
        if not self._terms:
            raise ZeroPolynomialError('the zero polynomial has no top component')

        return self.component(self.degree)

    def truncate(self, degree: int) -> 'NCPoly':
        """The part of degree at most `degree`, that is `sum(f_i, i <= degree)`."""
        return self._new({
            k: v
            for k, v in self._terms.items()
            if len(k) <= degree
        })


class ExtendedNCPoly(NCPoly):
    """An element of `T[z]`, with every word stored as `z^a * u`."""
    __slots__ = ()

    def central_degree(self) -> int:
        """Largest power of the central variable in any term."""
        return max(map(central_power, self._terms), default=0)

    def times_central(self, power: int = 1) -> 'ExtendedNCPoly':
        prefix = (CENTRAL,) * power
        return self._new({prefix + k: v for k, v in self._terms.items()})

    def divide_central(self) -> 'ExtendedNCPoly':
        """Exact division by the central variable."""
        terms = {}
        for word, coeff in self._terms.items():
            if not word or word[0] != CENTRAL:
                raise ExactDivisionError(
                    f'{self} is not divisible by {self.ring.alphabet.central}'
                )

            terms[word[1:]] = coeff

        return self._new(terms)

