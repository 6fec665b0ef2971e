from __future__ import annotations

import dataclasses
import typing

import numpy
from scipy.special import logsumexp, xlogy

from reuse_vr.commons import project_simplex
from reuse_vr.errors import ParameterRangeError

from .. import games


@dataclasses.dataclass(frozen = True, eq = False)
class CompositeTerm:
    """
    One of the composite terms phi(x) or psi(y) of a game:

    - zero;
    - linear <b, u> with ``vector`` b;
    - quadratic ``coefficient``/2 |u|^2;
    - entropy ``coefficient`` sum u log u, on the simplex only.
    """

    kind: games.TermKind = games.TermKind.ZERO
    coefficient: float = 0.0
    vector: typing.Optional[numpy.ndarray] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, 'kind', games.TermKind(self.kind))

        if self.kind is games.TermKind.LINEAR:
            if self.vector is None:
                raise ParameterRangeError('vector', None, 'a vector for a linear term')

            object.__setattr__(self, 'vector', numpy.asarray(self.vector, dtype = float))

        if self.kind in (games.TermKind.QUADRATIC, games.TermKind.ENTROPY) and not self.coefficient > 0:
            raise ParameterRangeError('coefficient', self.coefficient, 'a positive coefficient')

    @classmethod
    def parse(cls, spec) -> CompositeTerm:
        """From 'zero' or a mapping {kind, coefficient, vector}."""
        if spec is None or isinstance(spec, CompositeTerm):
            return spec or cls()

        if isinstance(spec, str):
            return cls(kind = spec)

        return cls(kind = spec.get('kind', 'zero'), coefficient = float(spec.get('coefficient', 0.0)), vector = spec.get('vector'))

    @property
    def entropy(self) -> float:
        """Entropy weight absorbed by mirror steps (0 unless entropic)."""
        return self.coefficient if self.kind is games.TermKind.ENTROPY else 0.0

    @property
    def smoothness(self) -> float:
        return self.coefficient if self.kind is games.TermKind.QUADRATIC else 0.0

    @property
    def gradient_bound(self) -> float:
        """Bound on |smooth gradient| over a unit-radius domain."""
        if self.kind is games.TermKind.LINEAR:
            return float(numpy.linalg.norm(self.vector))

        return self.smoothness

    def value(self, u) -> float:
        u = numpy.asarray(u, dtype = float)

        if self.kind is games.TermKind.LINEAR:
            return float(self.vector @ u)

        if self.kind is games.TermKind.QUADRATIC:
            return 0.5 * self.coefficient * float(u @ u)

        if self.kind is games.TermKind.ENTROPY:
            return self.coefficient * float(xlogy(u, u).sum())

        return 0.0

    def smooth_gradient(self, u) -> numpy.ndarray:
        """Gradient of the term, leaving out the entropy (handled exactly by mirror steps)."""
        u = numpy.asarray(u, dtype = float)

        if self.kind is games.TermKind.LINEAR:
            return self.vector.copy()

        if self.kind is games.TermKind.QUADRATIC:
            return self.coefficient * u

        return numpy.zeros_like(u)

    def gradient(self, u) -> numpy.ndarray:
        u = numpy.asarray(u, dtype = float)

        if self.kind is games.TermKind.ENTROPY:
            return self.coefficient * (1 + numpy.log(u))

        return self.smooth_gradient(u)

    def conjugate(self, c, simplex: bool) -> float:
        """max over the unit ball (or the simplex) of <c, u> - term(u)."""
        c = numpy.asarray(c, dtype = float)

        if self.kind is games.TermKind.LINEAR:
            return games.CompositeTerm().conjugate(c - self.vector, simplex)

        if self.kind is games.TermKind.ENTROPY:
            if not simplex:
                raise ParameterRangeError('kind', 'entropy', 'an entropy term on the simplex factor only')

            return self.coefficient * float(logsumexp(c / self.coefficient))

        if self.kind is games.TermKind.QUADRATIC:
            if simplex:
                u = project_simplex(c / self.coefficient)
            else:
                norm = float(numpy.linalg.norm(c))
                u = c / max(norm, self.coefficient)

            return float(c @ u) - self.value(u)

        return float(c.max()) if simplex else float(numpy.linalg.norm(c))
