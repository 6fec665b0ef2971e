from __future__ import annotations

import dataclasses

import numpy
from scipy.special import expit

from .. import fsm


@dataclasses.dataclass(frozen = True)
class GlmComponent:
    """
    One component f(x) = phi(a.x) + l2/2 |x|^2 with phi the squared or logistic loss of label ``b``.

        >>> component = GlmComponent(numpy.array([1.0, 2.0]), 1.0, fsm.Link.SQUARED)
        >>> component.gradient(numpy.array([1.0, 0.0])).tolist()
        [0.0, 0.0]
    """

    a: numpy.ndarray
    b: float
    link: fsm.Link = fsm.Link.SQUARED
    l2: float = 0.0

    @property
    def smoothness(self) -> float:
        return float(self.a @ self.a) * self.link.curvature + self.l2

    def value(self, x: numpy.ndarray) -> float:
        z = float(self.a @ x)

        if self.link is fsm.Link.SQUARED:
            loss = 0.5 * (z - self.b) ** 2
        else:
            loss = float(numpy.logaddexp(0.0, -self.b * z))

        return loss + 0.5 * self.l2 * float(x @ x)

    def gradient(self, x: numpy.ndarray) -> numpy.ndarray:
        z = float(self.a @ x)

        if self.link is fsm.Link.SQUARED:
            scale = z - self.b
        else:
            scale = -self.b * float(expit(-self.b * z))

        return scale * self.a + self.l2 * x
