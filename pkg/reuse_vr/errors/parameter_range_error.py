class ParameterRangeError(ValueError):
    """Raised when a numerical parameter falls outside its admissible range."""

    def __init__(self, name: str, value, expected: str) -> None:
        self.name = name
        self.value = value
        super().__init__(f"'{name}' = {value} is invalid: expected {expected}.")
