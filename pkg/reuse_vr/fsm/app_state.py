from __future__ import annotations

import dataclasses
import math

import numpy


@dataclasses.dataclass(frozen = True)
class AppState:
    """
    The pair u = (x, v) of the accelerated proximal point loop.

        >>> state = AppState(x = numpy.array([1.0]), v = numpy.array([0.0]), lam = 1.0, mu = 1.0)
        >>> state.rho, round(float(state.y[0]), 3)
        (3.0, 0.634)
    """

    x: numpy.ndarray
    v: numpy.ndarray
    lam: float
    mu: float

    @property
    def rho(self) -> float:
        return (self.mu + 2 * self.lam) / self.mu

    @property
    def iota(self) -> float:
        return 2 / self.mu + 1 / self.lam

    @property
    def y(self) -> numpy.ndarray:
        s = 1 / math.sqrt(self.rho)
        return self.x / (1 + s) + (s / (1 + s)) * self.v

    def pack(self) -> numpy.ndarray:
        return numpy.concatenate([self.x, self.v])

    @classmethod
    def unpack(cls, u, lam: float, mu: float) -> AppState:
        u = numpy.asarray(u, dtype = float)
        dim = len(u) // 2
        return cls(x = u[:dim], v = u[dim:], lam = lam, mu = mu)
