import os
import re
import logging
import typing as t

from .grammar import parse_poly
from ..freealg import Alphabet, Field, FreeAlgebra, NCPoly
from ..resolution import GradedAlgebra
from ..centralext import Deformation
from ..gadgets.utils import env
from ..errors import (
    PresentationError,
    PresentationSyntaxError,
    ZeroPolynomialError
)

logger = logging.getLogger(__name__)

_DIRECTIVE = re.compile(r'\s*(\S+)\s*(.*?)\s*$')
_FIELD = re.compile(r'(?:Q|GF\s+(\d+))\Z')
_OPTIONS = {'central', 'max_deg'}

ALGEBRA = 'algebra'
DEFORMATION = 'deformation'


class PresentationFile:
    """
    A parsed presentation file, before the algebra is built.

    `rel` lines make an algebra file, `def` lines a deformation file;
    a file may not mix them.
    """
    def __repr__(self):
        return (
            f'PresentationFile({self.filename!r}, kind={self.kind!r}, '
            f'gens={list(self.names)!r}, relations={len(self.relations)})'
        )

    def __init__(self, filename: str = '<string>', directory: t.Optional[str] = None):
        self.filename = filename
        self.directory = directory
        self.field = Field.rational()
        self.names: t.Tuple[str, ...] = ()
        self.ring: t.Optional[FreeAlgebra] = None
        self.kind: t.Optional[str] = None
        self.relations: t.List[NCPoly] = []
        self.base_path: t.Optional[str] = None
        self.options: t.Dict[str, t.Any] = {}

    @property
    def central(self) -> t.Optional[str]:
        return self.options.get('central')

    @property
    def max_degree(self) -> t.Optional[int]:
        return self.options.get('max_deg')

    def to_dict(self):
        return {
            '_': 'PresentationFile',
            'kind': self.kind or ALGEBRA,
            'field': self.field.name,
            'gens': list(self.names),
            'relations': [str(e) for e in self.relations],
            'base': self.base_path,
            'options': self.options
        }

    def _error(self, message: str, line: int, column: t.Optional[int] = None):
        return PresentationSyntaxError(message, line, column, self.filename)

    def feed(self, text: str):
        for number, raw in enumerate(text.splitlines(), start=1):
            content = raw.split('#', 1)[0]
            if not content.strip():
                continue

            match = _DIRECTIVE.match(content)
            keyword, rest = match.group(1), match.group(2)
            offset = match.start(2)

            handler = getattr(self, f'_on_{keyword}', None)
            if handler is None:
                raise self._error(f'unknown directive {keyword!r}', number, match.start(1) + 1)

            handler(rest, number, offset)

        return self

    def _on_field(self, rest: str, line: int, offset: int):
        if self.ring is not None:
            raise self._error('field must come before gens', line)

        match = _FIELD.match(rest)
        if match is None:
            raise self._error(f"expected 'Q' or 'GF <p>', got {rest!r}", line, offset + 1)

        self.field = Field.prime(int(match.group(1))) if match.group(1) else Field.rational()

    def _on_gens(self, rest: str, line: int, offset: int):
        if self.ring is not None:
            raise self._error('gens is declared twice', line)

        self.names = tuple(rest.split())
        self.ring = FreeAlgebra(Alphabet(self.names), self.field)

    def _on_option(self, rest: str, line: int, offset: int):
        name, _, value = rest.partition(' ')
        value = value.strip()
        if name not in _OPTIONS or not value:
            raise self._error(f'unknown option {rest!r}', line, offset + 1)

        if name == 'max_deg':
            if not value.isdigit():
                raise self._error(f'max_deg must be an integer, got {value!r}', line, offset + 1)

            self.options[name] = int(value)

        else:
            self.options[name] = value

    def _on_base(self, rest: str, line: int, offset: int):
        if not rest:
            raise self._error('base needs a path', line, offset + 1)

        self.base_path = rest

    def _on_rel(self, rest: str, line: int, offset: int):
        self._relations(ALGEBRA, rest, line, offset)

    def _on_def(self, rest: str, line: int, offset: int):
        self._relations(DEFORMATION, rest, line, offset)

    def _relations(self, kind: str, rest: str, line: int, offset: int):
        if self.ring is None:
            raise self._error('gens must come before relations', line)

        if self.kind not in (None, kind):
            raise PresentationError(
                f'{self.filename}:{line}: rel and def lines can not be mixed'
            )

        self.kind = kind
        position = offset
        for piece in rest.split(';'):
            if piece.strip():
                poly = parse_poly(
                    piece,
                    self.ring,
                    line=line,
                    offset=position,
                    filename=self.filename
                )
                if not poly:
                    raise ZeroPolynomialError(
                        f'{self.filename}:{line}: relation {piece.strip()!r} is zero'
                    )

                self.relations.append(poly)

            position += len(piece) + 1

    def build(
        self,
        max_degree: t.Optional[int] = None,
        strict: bool = False
    ) -> t.Union[GradedAlgebra, Deformation]:
        """
        Build the algebra or deformation the file describes.

        The degree bound is `max_degree`, then the file's `option max_deg`,
        then `PBWCHECK_MAX_DEG`.

        Raises:
            NonMinimalRelationsError: an algebra file with `strict` set, or a
                deformation whose top components are not minimal.
        """
        if self.ring is None:
            raise PresentationError(f'{self.filename}: no gens line')

        if max_degree is None:
            max_degree = self.max_degree or env('PBWCHECK_MAX_DEG', 10, int)

        if self.kind != DEFORMATION:
            if self.base_path is not None:
                raise PresentationError(f'{self.filename}: base is only allowed with def lines')

            algebra = GradedAlgebra(self.ring, self.relations, max_degree)
            return algebra.check_minimal(strict)

        base = None
        if self.base_path is not None:
            path = self.base_path
            if self.directory and not os.path.isabs(path):
                path = os.path.join(self.directory, path)

            source = load(path)
            if source.kind == DEFORMATION:
                raise PresentationError(f'{self.filename}: base file {path} is a deformation file')

            if source.names != self.names or source.field != self.field:
                raise PresentationError(
                    f'{self.filename}: base file {path} declares other gens or another field'
                )

            base = GradedAlgebra(self.ring, [_rebase(e, self.ring) for e in source.relations], max_degree)

        deformation = Deformation(self.ring, self.relations, max_degree, base)
        # pruning would change U, so a redundant top component is fatal
        deformation.base.check_minimal(strict=True)
        return deformation


def _rebase(poly: NCPoly, ring: FreeAlgebra) -> NCPoly:
    return ring.element(dict(poly.items()))


def load_text(
    text: str,
    filename: str = '<string>',
    directory: t.Optional[str] = None
) -> PresentationFile:
    return PresentationFile(filename, directory).feed(text)


def load(path: str) -> PresentationFile:
    with open(path, encoding='utf-8') as file:
        text = file.read()

    return load_text(text, path, os.path.dirname(os.path.abspath(path)))


def parse_text(
    text: str,
    max_degree: t.Optional[int] = None,
    strict: bool = False,
    filename: str = '<string>'
) -> t.Union[GradedAlgebra, Deformation]:
    """
    Parse a presentation given as text.

    Example:
    ```python
    algebra = parse_text('gens x y z\\nrel y^2; x*y*z')
    ```
    """
    return load_text(text, filename).build(max_degree, strict)


def parse(
    path: str,
    max_degree: t.Optional[int] = None,
    strict: bool = False
) -> t.Union[GradedAlgebra, Deformation]:
    return load(path).build(max_degree, strict)
