from __future__ import annotations

import dataclasses
import functools
import warnings

import numpy

from reuse_vr.errors import DimensionMismatchError, ParameterRangeError
from reuse_vr.warnings import ShiftWarning


@dataclasses.dataclass(frozen = True, eq = False)
class TopEvProblem:
    """
    Find a unit x with x^T A^T A x >= (1 - eps) lambda_1 by shift-and-invert with shift ``lambda_prime``.

    ``alpha`` sets the proximal regularization of every linear solve to alpha times the estimate of
    lambda_1, and at least the estimated strong convexity. The exact spectrum below costs a dense
    eigendecomposition: it scores results and checks shifts, and the solver never reads it.
    """

    matrix: numpy.ndarray
    eps: float
    lambda_prime: float
    alpha: float = 1.0

    def __post_init__(self) -> None:
        matrix = numpy.array(self.matrix, dtype = float)

        if matrix.ndim != 2:
            raise DimensionMismatchError('matrix', '(n, d)', matrix.shape)

        object.__setattr__(self, 'matrix', matrix)

        if not 0 < self.eps < 1:
            raise ParameterRangeError('eps', self.eps, '0 < eps < 1')

        if not self.alpha > 0:
            raise ParameterRangeError('alpha', self.alpha, 'alpha > 0')

    @property
    def dim(self) -> int:
        return self.matrix.shape[1]

    @functools.cached_property
    def spectrum(self) -> numpy.ndarray:
        """Eigenvalues of A^T A in decreasing order."""
        return numpy.linalg.eigvalsh(self.matrix.T @ self.matrix)[::-1]

    @property
    def top_eigenvalue(self) -> float:
        return float(self.spectrum[0])

    @property
    def gap(self) -> float:
        return float(self.spectrum[0] - self.spectrum[1]) if self.dim > 1 else float(self.spectrum[0])

    def check_shift(self) -> None:
        """Reject shifts below the exact lambda_1; warn when the shift is within gap / 120 of it."""
        if not self.lambda_prime > self.top_eigenvalue:
            raise ParameterRangeError('lambda_prime', self.lambda_prime, f'lambda_prime > lambda_1 = {self.top_eigenvalue:.6g}')

        if self.lambda_prime <= self.top_eigenvalue + self.gap / 120:
            message = [
                f"The shift {self.lambda_prime:.6g} is within gap / 120 of the top eigenvalue {self.top_eigenvalue:.6g};",
                "the linear systems are badly conditioned and the power iterations may stall.",
                ]
            warnings.warn(" ".join(message), ShiftWarning)
