class LoopConfigurationError(ValueError):
    """Raised for invalid outer loop settings (iteration count, weights, loop type)."""

    pass
