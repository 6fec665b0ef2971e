from __future__ import annotations

import dataclasses
import typing

from reuse_vr.errors import ParameterRangeError


@dataclasses.dataclass(frozen = True)
class ReuseParameters:
    eta: float
    eta_prime: float
    epsilon: float
    tau: float
    delta: float
    delta_sub: float
    failure_bound: float

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def reuse_parameters(
        eta: float,
        delta: float,
        n_outer: int,
        epsilon: typing.Optional[float] = None,
        settings = None,
        ) -> ReuseParameters:
    """
    Noise and accuracy needed to reuse one oblivious seed across ``n_outer`` sub-problems.

    The sub-solver runs at accuracy eta' = min(eta / 2, eta * epsilon) with failure probability
    delta / (5 n_outer^2), and its output is perturbed by uniform noise of half-width
    tau = eta' / (2 epsilon). ``epsilon`` defaults to the sub-solver failure probability.

    >>> parameters = reuse_parameters(eta = 1.0, delta = 0.2, n_outer = 2)
    >>> parameters.delta_sub, parameters.tau
    (0.01, 0.5)
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()

    if not eta > 0:
        raise ParameterRangeError('eta', eta, 'eta > 0')

    if not 0 < delta < 1:
        raise ParameterRangeError('delta', delta, '0 < delta < 1')

    delta_sub = delta / (settings.framework.reuse_failure_factor * n_outer ** 2)
    epsilon = delta_sub if epsilon is None else epsilon

    if not 0 < epsilon <= 1:
        raise ParameterRangeError('epsilon', epsilon, '0 < epsilon <= 1')

    eta_prime = min(eta / 2, eta * epsilon)

    return ReuseParameters(
        eta = eta,
        eta_prime = eta_prime,
        epsilon = epsilon,
        tau = eta_prime / (2 * epsilon),
        delta = delta,
        delta_sub = delta_sub,
        failure_bound = min(1.0, settings.framework.reuse_failure_factor * n_outer ** 2 * delta_sub),
        )
