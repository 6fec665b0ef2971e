class BoxViolationError(ValueError):
    """Raised when a sampler produces values outside the declared bounding box."""

    def __init__(self, name: str, low, high, offending) -> None:
        self.name = name
        self.offending = offending
        message = f"Sampler '{name}' produced {offending} outside the box [{low}, {high}]."
        super().__init__(message)
