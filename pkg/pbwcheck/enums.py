import enum


class Method(str, enum.Enum):
    JACOBI = 'jacobi'
    REGULARITY = 'regularity'
    CONDITION4 = 'condition4'
    ORACLE = 'oracle'

    @classmethod
    def parse(cls, value: str):
        """Parse a method name, `all` expands to every method."""
        value = value.strip().lower()
        if value == 'all':
            return list(cls)

        for method in cls:
            if method.value == value:
                return [method]

        raise ValueError(f'invalid method: {value!r}')


class Status(str, enum.Enum):
    """How much of a complexity value is certified at the bound."""
    EXACT = 'exact'
    AT_LEAST = 'at-least'

    @property
    def is_exact(self):
        return self is Status.EXACT


class Verdict(str, enum.Enum):
    YES = 'yes'
    NO = 'no'
    UNDETERMINED = 'undetermined'

    @classmethod
    def from_bool(cls, value: bool):
        return cls.YES if value else cls.NO
