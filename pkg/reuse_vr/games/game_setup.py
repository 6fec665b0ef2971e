from __future__ import annotations

import dataclasses
import math
import typing

import numpy
from scipy.special import softmax, xlogy

from reuse_vr.commons import as_vector, project_ball, project_simplex
from reuse_vr.errors import ParameterRangeError

from .. import games

# (x weight, y weight, centre) of one Bregman term of a mirror step.
Term = typing.Tuple[float, float, numpy.ndarray]


@dataclasses.dataclass(frozen = True)
class GameSetup:
    """
    Geometry of a game: z = (x, y) with x in the unit ball of R^n and y in the unit ball or the
    simplex of R^m, and the distance generating function r(z) = |x|^2/2 + (|y|^2/2 or sum y log y).

    ``c`` and ``C`` compare the setup norm with the infinity norm; ``theta`` bounds the range of r.
    """

    domain: games.Domain
    n: int
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, 'domain', games.Domain(self.domain))

    @classmethod
    def for_game(cls, game, domain) -> GameSetup:
        setup = cls(domain = domain, n = game.n, m = game.m)
        setup.check(game)
        return setup

    def check(self, game) -> None:
        if (game.n, game.m) != (self.n, self.m):
            raise ParameterRangeError('game', (game.m, game.n), f'a {self.m} x {self.n} matrix')

        if game.phi.entropy > 0 or (game.psi.entropy > 0 and not self.domain.simplex):
            raise ParameterRangeError('entropy', 'entropy term', 'entropy on the simplex factor only')

    @property
    def dim(self) -> int:
        return self.n + self.m

    @property
    def c(self) -> float:
        return 1.0

    @property
    def C(self) -> float:
        return float(self.dim ** 2 if self.domain.simplex else self.dim)

    @property
    def diameter(self) -> float:
        return 2 * math.sqrt(2)

    @property
    def theta(self) -> float:
        return 0.5 + math.log(self.m) if self.domain.simplex else 1.0

    def split(self, z) -> typing.Tuple[numpy.ndarray, numpy.ndarray]:
        z = as_vector(z, 'z', self.dim)
        return z[:self.n], z[self.n:]

    def join(self, x, y) -> numpy.ndarray:
        return numpy.concatenate([numpy.asarray(x, dtype = float), numpy.asarray(y, dtype = float)])

    def project(self, z) -> numpy.ndarray:
        x, y = self.split(z)
        return self.join(project_ball(x), project_simplex(y) if self.domain.simplex else project_ball(y))

    def initial_point(self) -> numpy.ndarray:
        """argmin r: the origin, with the uniform distribution on the simplex factor."""
        y = numpy.full(self.m, 1.0 / self.m) if self.domain.simplex else numpy.zeros(self.m)
        return self.join(numpy.zeros(self.n), y)

    def mirror_step(self, h, terms: typing.Sequence[Term], floor: float = 1e-12) -> numpy.ndarray:
        """
        argmin over the domain of <h, u> + sum_k a_k V_{z_k}(u), with separate x and y weights per term.

        The ball factors are a projected average; the simplex factor is exponential weights over
        the geometric mean of the centres, clamped below at ``floor``.
        """
        hx, hy = self.split(h)
        weight_x = sum(term[0] for term in terms)
        weight_y = sum(term[1] for term in terms)
        centres = [self.split(term[2]) for term in terms]
        x = project_ball((sum(term[0] * centre[0] for term, centre in zip(terms, centres)) - hx) / weight_x)

        if self.domain.simplex:
            logits = sum(term[1] * numpy.log(numpy.maximum(centre[1], floor)) for term, centre in zip(terms, centres) if term[1])
            y = softmax((logits - hy) / weight_y)
        else:
            y = project_ball((sum(term[1] * centre[1] for term, centre in zip(terms, centres)) - hy) / weight_y)

        return self.join(x, y)

    def bregman(self, z, z_prime) -> float:
        """V_z(z') = r(z') - r(z) - <grad r(z), z' - z>."""
        x, y = self.split(z)
        x_prime, y_prime = self.split(z_prime)
        value = 0.5 * float((x_prime - x) @ (x_prime - x))

        if self.domain.simplex:
            return value + float((xlogy(y_prime, y_prime) - xlogy(y_prime, y)).sum())

        return value + 0.5 * float((y_prime - y) @ (y_prime - y))

    def uniform_centre(self) -> numpy.ndarray:
        """Centre whose Bregman term is the entropy of y, up to a constant on the simplex."""
        return self.initial_point()


def prox_step(setup: GameSetup, z, g, alpha: float, anchor = None, floor: float = 1e-12) -> numpy.ndarray:
    """
    argmin over the domain of <g, u> + alpha V_anchor(u), anchoring at ``z`` by default.

    Simplex anchors must be nonnegative; zero coordinates are clamped to ``floor``.

    >>> setup = GameSetup('ball_simplex', 0, 2)
    >>> prox_step(setup, [0.5, 0.5], [0.0, math.log(4)], 1.0).round(12).tolist()
    [0.8, 0.2]
    """
    anchor = numpy.asarray(z if anchor is None else anchor, dtype = float)

    if not alpha > 0:
        raise ParameterRangeError('alpha', alpha, 'alpha > 0')

    if setup.domain.simplex and (setup.split(anchor)[1] < 0).any():
        raise ParameterRangeError('anchor', anchor.tolist(), 'nonnegative simplex coordinates')

    return setup.mirror_step(numpy.asarray(g, dtype = float), [(alpha, alpha, anchor)], floor)
