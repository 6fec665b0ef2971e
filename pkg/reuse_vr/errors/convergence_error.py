class ConvergenceError(RuntimeError):
    """Raised when an iterative reference solver stops before meeting its tolerance."""

    def __init__(self, solver: str, iterations: int, residual: float, tolerance: float) -> None:
        self.solver = solver
        self.iterations = iterations
        self.residual = residual
        message = f"'{solver}' stopped after {iterations} iterations with residual {residual:.3e} > {tolerance:.3e}."
        super().__init__(message)
