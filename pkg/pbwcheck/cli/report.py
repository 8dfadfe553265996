import enum
import json
import typing as t

from ..about import REPORT_SCHEMA, __version__
from ..gadgets.utils import is_like_list


class Report(t.NamedTuple):
    """The outcome of one command: the payload and the process exit code."""
    command: str
    data: t.Dict[str, t.Any]
    exit_code: int = 0

    def to_dict(self):
        return {
            'schema': REPORT_SCHEMA,
            'version': __version__,
            'command': self.command,
            **plain(self.data)
        }


def plain(data):
    """Reduce `data` to JSON types, dropping the `_` type tags of `to_dict`."""
    if hasattr(data, 'to_dict'):
        data = data.to_dict()

    if isinstance(data, dict):
        return {str(k): plain(v) for k, v in data.items() if k != '_'}

    if is_like_list(data):
        return [plain(e) for e in data]

    if isinstance(data, enum.Enum):
        return data.value

    return data


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + '\n'


def _lines(data, level: int = 0) -> t.Iterator[str]:
    pad = '  ' * level
    for key in sorted(data):
        value = data[key]
        if isinstance(value, dict):
            if value:
                yield f'{pad}{key}:'
                yield from _lines(value, level + 1)

            else:
                yield f'{pad}{key}: -'

        elif isinstance(value, list) and value and any(isinstance(e, (dict, list)) for e in value):
            yield f'{pad}{key}:'
            for item in value:
                if isinstance(item, dict):
                    first = True
                    for line in _lines(item, level + 2):
                        yield f'{pad}  - {line.lstrip()}' if first else line
                        first = False

                else:
                    yield f'{pad}  - {_scalar(item)}'

        else:
            yield f'{pad}{key}: {_scalar(value)}'


def _scalar(value) -> str:
    if value is None:
        return '-'

    if isinstance(value, bool):
        return 'yes' if value else 'no'

    if isinstance(value, list):
        return ', '.join(_scalar(e) for e in value) or '-'

    return str(value)


def _betti(table: t.Dict[str, t.Dict[str, int]]) -> t.List[str]:
    degrees = sorted({int(j) for row in table.values() for j in row})
    if not degrees:
        return []

    width = max(len(str(e)) for e in degrees + [v for row in table.values() for v in row.values()])
    head = ' ' * 4 + ' '.join(str(j).rjust(width) for j in degrees)
    lines = ['betti (rows n, columns j):', head]
    for n in sorted(table, key=int):
        row = table[n]
        cells = ' '.join(str(row.get(str(j), '.')).rjust(width) for j in degrees)
        lines.append(f'{n.rjust(3)} {cells}')

    return lines


def render_text(report: Report) -> str:
    """A human rendering of the report, a Betti table printed as a grid."""
    data = report.to_dict()
    lines = []

    verdict = data.get('verdict')
    if verdict is not None:
        lines.append(f'PBW: {verdict}' + (', unanimous' if data.get('unanimous') else ''))

    betti = data.pop('betti', None)
    for line in _lines(data):
        lines.append(line)

    if betti:
        lines.extend(_betti(betti))

    return '\n'.join(lines) + '\n'
