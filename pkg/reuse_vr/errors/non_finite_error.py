import numpy


class NonFiniteError(ValueError):
    """Raised when a vector that must be finite contains NaN or infinity."""

    def __init__(self, name: str, value) -> None:
        value = numpy.asarray(value)
        positions = numpy.flatnonzero(~numpy.isfinite(value)).tolist()
        self.positions = positions
        super().__init__(f"'{name}' has non-finite coordinates at {positions}.")
