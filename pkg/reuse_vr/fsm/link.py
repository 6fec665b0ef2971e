import enum


class Link(str, enum.Enum):
    SQUARED = 'squared'
    LOGISTIC = 'logistic'

    @property
    def curvature(self) -> float:
        """Bound on the second derivative of the scalar loss."""
        return 1.0 if self is Link.SQUARED else 0.25
