import enum


class TermKind(str, enum.Enum):
    ZERO = 'zero'
    LINEAR = 'linear'
    QUADRATIC = 'quadratic'
    ENTROPY = 'entropy'
