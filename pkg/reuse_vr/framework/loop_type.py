import enum


class LoopType(str, enum.Enum):
    """How the outer loop treats oblivious seeds and noise."""

    STANDARD = 'standard'
    NOISY = 'noisy'
    REUSE = 'reuse'

    @classmethod
    def parse(cls, value) -> 'LoopType':
        if isinstance(value, cls):
            return value

        return cls(str(value).lower())
