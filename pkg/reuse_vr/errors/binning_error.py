class BinningError(ValueError):
    """Raised when samples cannot be binned (too many dimensions, or an empty box)."""

    pass
