class PreconditionError(ValueError):
    """Raised when the inputs of a diagnostic violate its stated precondition."""

    pass
