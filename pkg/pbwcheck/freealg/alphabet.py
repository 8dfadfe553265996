import re
import typing as t

from ..alias import Letter, Word
from ..errors import NameCollisionError, PresentationError

_NAME = re.compile(r'[A-Za-z_][A-Za-z0-9_]*\Z')

# the central letter always has the smallest code
CENTRAL: Letter = 0


class Alphabet:
    """
    Ordered generator names of a free algebra, all of degree 1.

    Generators are stored as integer codes: the first declared name gets the
    largest code, the optional central variable gets code 0. Comparing words
    as `(len(word), word)` is then the degree-lexicographic order with the
    first declared generator largest and the central variable smallest.
    """
    def __repr__(self):
        if self.central is None:
            return f'Alphabet({list(self.names)!r})'

        return f'Alphabet({list(self.names)!r}, central={self.central!r})'

    def __eq__(self, other):
        return (
            isinstance(other, Alphabet)
            and self.names == other.names
            and self.central == other.central
        )

    def __hash__(self):
        return hash((self.names, self.central))

    def __len__(self):
        return len(self.names)

    def __init__(
        self,
        names: t.Iterable[str],
        central: t.Optional[str] = None
    ):
        names = tuple(names)

        if not names:
            raise PresentationError('an alphabet needs at least one generator')

        for name in names:
            if not _NAME.match(name):
                raise PresentationError(f'invalid generator name: {name!r}')

        if len(set(names)) != len(names):
            duplicated = sorted({e for e in names if names.count(e) > 1})
            raise PresentationError(f'duplicated generator names: {duplicated}')

        if central is not None:
            if not _NAME.match(central):
                raise PresentationError(f'invalid generator name: {central!r}')

            if central in names:
                raise NameCollisionError(
                    central,
                    hint='choose another central variable name with --central'
                )

        self.names = names
        self.central = central

        size = len(names)
        self._codes: t.Dict[str, Letter] = {
            name: size - index
            for index, name in enumerate(names)
        }
        if central is not None:
            self._codes[central] = CENTRAL

        self._names = {v: k for k, v in self._codes.items()}

    @property
    def letters(self) -> t.Tuple[Letter, ...]:
        """Generator codes in declared order (largest first), without `z`."""
        return tuple(range(len(self.names), 0, -1))

    @property
    def has_central(self):
        return self.central is not None

    def code(self, name: str) -> Letter:
        try:
            return self._codes[name]

        except KeyError:
            raise PresentationError(f'unknown generator: {name!r}') from None

    def name(self, letter: Letter) -> str:
        return self._names[letter]

    def extend(self, central: str) -> 'Alphabet':
        if self.central is not None:
            raise NameCollisionError(
                central,
                hint=f'the alphabet already has the central variable {self.central!r}'
            )

        return Alphabet(self.names, central=central)

    def base(self) -> 'Alphabet':
        if self.central is None:
            return self

        return Alphabet(self.names)

    def format_word(self, word: Word) -> str:
        """Render a word as `x^2*y`, the empty word as `1`."""
        if not word:
            return '1'

        parts = []
        index = 0
        while index < len(word):
            letter = word[index]
            run = 1
            while index + run < len(word) and word[index + run] == letter:
                run += 1

            name = self.name(letter)
            parts.append(name if run == 1 else f'{name}^{run}')
            index += run

        return '*'.join(parts)
