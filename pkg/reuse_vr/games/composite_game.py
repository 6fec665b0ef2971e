from __future__ import annotations

import dataclasses
import functools
import typing

import numpy

from reuse_vr.errors import DimensionMismatchError

from .. import games


@dataclasses.dataclass(frozen = True, eq = False)
class CompositeGame:
    """f(x, y) = y^T A x + phi(x) - psi(y), minimized over x and maximized over y; A is m x n."""

    matrix: numpy.ndarray
    phi: games.CompositeTerm = dataclasses.field(default_factory = games.CompositeTerm)
    psi: games.CompositeTerm = dataclasses.field(default_factory = games.CompositeTerm)

    def __post_init__(self) -> None:
        matrix = numpy.array(self.matrix, dtype = float)

        if matrix.ndim != 2:
            raise DimensionMismatchError('matrix', '(m, n)', matrix.shape)

        matrix.setflags(write = False)
        object.__setattr__(self, 'matrix', matrix)
        object.__setattr__(self, 'phi', games.CompositeTerm.parse(self.phi))
        object.__setattr__(self, 'psi', games.CompositeTerm.parse(self.psi))

        for name, term, size in (('phi', self.phi, self.n), ('psi', self.psi, self.m)):
            if term.vector is not None and term.vector.shape != (size,):
                raise DimensionMismatchError(f"{name}.vector", (size,), term.vector.shape)

    @property
    def m(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    @functools.cached_property
    def row_norms(self) -> numpy.ndarray:
        return numpy.linalg.norm(self.matrix, axis = 1)

    @functools.cached_property
    def column_norms(self) -> numpy.ndarray:
        return numpy.linalg.norm(self.matrix, axis = 0)

    @property
    def frobenius(self) -> float:
        return float(numpy.linalg.norm(self.matrix))

    @functools.cached_property
    def spectral(self) -> float:
        return float(numpy.linalg.norm(self.matrix, 2)) if self.matrix.size else 0.0

    def value(self, x, y) -> float:
        x = numpy.asarray(x, dtype = float)
        y = numpy.asarray(y, dtype = float)
        return float(y @ self.matrix @ x) + self.phi.value(x) - self.psi.value(y)

    def smooth_mapping(self, x, y, products: typing.Optional[tuple] = None) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
        """
        The gradient mapping without the entropy parts of phi and psi; ``products`` = (A x, A^T y)
        when they come from a batch query.
        """
        ax, aty = products if products is not None else (self.matrix @ x, self.matrix.T @ y)
        return aty + self.phi.smooth_gradient(x), -ax + self.psi.smooth_gradient(y)
