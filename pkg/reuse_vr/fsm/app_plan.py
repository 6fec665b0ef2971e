from __future__ import annotations

import dataclasses
import math
import typing

import numpy

from reuse_vr.errors import ParameterRangeError
from reuse_vr.framework import ReuseParameters, reuse_parameters

from .. import fsm


@dataclasses.dataclass(frozen = True)
class AppPlan:
    """Every derived quantity of one accelerated proximal point run."""

    lam: float
    mu: float
    rho: float
    n_outer: int
    c: float
    robust_accuracy: float
    eta: float
    reuse: ReuseParameters
    sub_accuracy: float
    schedule: fsm.SvrgSchedule

    @property
    def seed_length(self) -> int:
        return self.schedule.length

    @property
    def tau(self) -> float:
        return self.reuse.tau

    def to_dict(self) -> dict:
        return {
            'lam': self.lam,
            'mu': self.mu,
            'rho': self.rho,
            'n_outer': self.n_outer,
            'c': self.c,
            'robust_accuracy': self.robust_accuracy,
            'eta': self.eta,
            'reuse': self.reuse.to_dict(),
            'sub_accuracy': self.sub_accuracy,
            'schedule': self.schedule.to_dict(),
            }


def app_plan(
        problem,
        gradient_norm: float,
        c: float,
        lam: float,
        delta: float,
        probabilities: typing.Optional[numpy.ndarray] = None,
        settings = None,
        ) -> AppPlan:
    """
    Derive the loop length, noise scale and sub-solver accuracy of an APP run.

    ``gradient_norm`` is |grad F(x0)|. The robust accuracy is c' = K max(2dc/L, c mu/2, c);
    eta = |grad F(x0)| / (L_F sqrt(c')); the sub-solver reaches eta' in the infinity norm against
    sub-problem gaps bounded by ``gap_safety`` |grad F(x0)|^2 / (2 mu).
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    mu = problem.mu

    if not c > 1:
        raise ParameterRangeError('c', c, 'c > 1')

    if not lam >= mu:
        raise ParameterRangeError('lambda', lam, f'lambda >= mu = {mu}')

    fsm_settings = settings.fsm
    rho = (mu + 2 * lam) / mu
    n_outer = math.ceil(fsm_settings.outer_constant * math.sqrt(rho) * math.log(1 + c * problem.lipschitz / mu))
    robust_accuracy = fsm_settings.robust_safety * max(2 * problem.dim * c / problem.L, c * mu / 2, c)

    # A zero gradient means x0 is optimal; any positive scale keeps the run well defined.
    gradient_norm = gradient_norm if gradient_norm > 0 else 1e-12
    eta = gradient_norm / (problem.lipschitz * math.sqrt(robust_accuracy))
    reuse = reuse_parameters(eta, delta, n_outer, settings = settings)
    gap_bound = fsm_settings.gap_safety * gradient_norm ** 2 / (2 * mu)
    sub_accuracy = gap_bound / reuse.eta_prime ** 2
    relative = fsm.high_precision_accuracy(sub_accuracy, mu, lam)
    schedule = fsm.svrg_schedule(problem, lam, relative, reuse.delta_sub, probabilities, settings)

    return AppPlan(
        lam = lam,
        mu = mu,
        rho = rho,
        n_outer = n_outer,
        c = c,
        robust_accuracy = robust_accuracy,
        eta = eta,
        reuse = reuse,
        sub_accuracy = sub_accuracy,
        schedule = schedule,
        )
