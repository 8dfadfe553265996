import typing as t
import typing_extensions as te

# letters are integer codes, see `freealg.alphabet`
Letter: te.TypeAlias = int
Word: te.TypeAlias = t.Tuple[int, ...]

CentralValue: te.TypeAlias = te.Literal[0, 1]
