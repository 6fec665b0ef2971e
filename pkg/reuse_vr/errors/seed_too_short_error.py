class SeedTooShortError(ValueError):
    """Raised when an oblivious seed holds fewer records than the sub-solver consumes."""

    def __init__(self, solver: str, required: int, available: int) -> None:
        self.required = required
        self.available = available
        super().__init__(f"'{solver}' needs {required} seed records but the seed holds {available}.")
