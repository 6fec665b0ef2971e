import os


class DegenerateNoiseError(ValueError):
    """Raised when a Noisy or Reuse loop is configured with zero-width noise."""

    def __init__(self, loop_type: str) -> None:
        message = [
            f"A {loop_type} loop was configured with tau = 0.",
            "Without noise the reused seed is not hidden and the total variation guarantee is lost.",
            "Set a positive tau, or pass allow_zero_noise = True to run it anyway.",
            ]
        super().__init__(os.linesep.join(message))
