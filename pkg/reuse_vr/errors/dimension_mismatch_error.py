class DimensionMismatchError(ValueError):
    """Raised when a vector does not live in the expected ambient space."""

    def __init__(self, name: str, expected, actual) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(f"'{name}' has shape {actual}, expected {expected}.")
