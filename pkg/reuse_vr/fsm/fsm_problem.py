from __future__ import annotations

import dataclasses
import functools
import typing

import numpy
from scipy.special import expit

from reuse_vr.commons import as_vector
from reuse_vr.errors import DimensionMismatchError, ParameterRangeError

from .. import fsm


@dataclasses.dataclass(frozen = True, eq = False)
class FsmProblem:
    """
    F(x) = (1/n) sum_i phi(a_i.x; b_i) + l2/2 |x|^2, the average of :class:`GlmComponent`.

    ``mu`` is computed from the data when not given: the smallest eigenvalue of A^T A / n plus
    ``l2`` for the squared link, ``l2`` alone for the logistic link.
    """

    features: numpy.ndarray
    labels: numpy.ndarray
    link: fsm.Link = fsm.Link.SQUARED
    l2: float = 0.0
    mu: typing.Optional[float] = None

    convex_components = True

    def __post_init__(self) -> None:
        features = numpy.array(self.features, dtype = float)

        if features.ndim != 2:
            raise DimensionMismatchError('features', '(n, d)', features.shape)

        labels = as_vector(self.labels, 'labels', features.shape[0])
        object.__setattr__(self, 'features', features)
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'link', fsm.Link(self.link))

        if self.l2 < 0:
            raise ParameterRangeError('l2', self.l2, 'l2 >= 0')

        if self.mu is None:
            object.__setattr__(self, 'mu', self._strong_convexity())

        if not self.mu > 0:
            raise ParameterRangeError('mu', self.mu, 'a strongly convex average (mu > 0)')

    @classmethod
    def random_ridge(cls, n: int, dim: int, rng: numpy.random.Generator, l2: float = 0.0, noise: float = 0.1) -> FsmProblem:
        """Gaussian rows scaled to unit expected norm, labels from a planted model."""
        features = rng.standard_normal((n, dim)) / numpy.sqrt(dim)
        planted = rng.standard_normal(dim)
        labels = features @ planted + noise * rng.standard_normal(n)
        return cls(features = features, labels = labels, l2 = l2)

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def dim(self) -> int:
        return self.features.shape[1]

    @functools.cached_property
    def smoothness(self) -> numpy.ndarray:
        """Per-component smoothness L_i."""
        return numpy.einsum('ij,ij->i', self.features, self.features) * self.link.curvature + self.l2

    @property
    def L(self) -> float:
        return float(self.smoothness.max())

    @functools.cached_property
    def lipschitz(self) -> float:
        """Smoothness L_F of the average F."""
        gram = self.features.T @ self.features / self.n
        return float(numpy.linalg.eigvalsh(gram)[-1]) * self.link.curvature + self.l2

    def _strong_convexity(self) -> float:
        if self.link is fsm.Link.LOGISTIC:
            return float(self.l2)

        gram = self.features.T @ self.features / self.n
        return float(numpy.linalg.eigvalsh(gram)[0]) + self.l2

    def component(self, index: int) -> fsm.GlmComponent:
        return fsm.GlmComponent(self.features[index], float(self.labels[index]), self.link, self.l2)

    def _scales(self, x: numpy.ndarray) -> numpy.ndarray:
        z = self.features @ x

        if self.link is fsm.Link.SQUARED:
            return z - self.labels

        return -self.labels * expit(-self.labels * z)

    def value(self, x) -> float:
        x = as_vector(x, 'x', self.dim)
        z = self.features @ x

        if self.link is fsm.Link.SQUARED:
            losses = 0.5 * (z - self.labels) ** 2
        else:
            losses = numpy.logaddexp(0.0, -self.labels * z)

        return float(losses.mean()) + 0.5 * self.l2 * float(x @ x)

    def gradient(self, x) -> numpy.ndarray:
        x = as_vector(x, 'x', self.dim)
        return self.features.T @ self._scales(x) / self.n + self.l2 * x

    def component_gradient(self, index: int, x) -> numpy.ndarray:
        a = self.features[index]
        z = float(a @ x)

        if self.link is fsm.Link.SQUARED:
            scale = z - self.labels[index]
        else:
            scale = -self.labels[index] * float(expit(-self.labels[index] * z))

        return scale * a + self.l2 * x

    def hessian(self, x) -> numpy.ndarray:
        x = as_vector(x, 'x', self.dim)

        if self.link is fsm.Link.SQUARED:
            curvatures = numpy.ones(self.n)
        else:
            sigma = expit(self.labels * (self.features @ x))
            curvatures = sigma * (1 - sigma)

        weighted = self.features * curvatures[:, None]
        return self.features.T @ weighted / self.n + self.l2 * numpy.eye(self.dim)
