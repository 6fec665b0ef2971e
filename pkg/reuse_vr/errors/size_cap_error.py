class SizeCapError(ValueError):
    """Raised when a dense reference solver is asked to handle an instance above its cap."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(f"{what} has {size} entries; dense reference solving is capped at {cap}.")
