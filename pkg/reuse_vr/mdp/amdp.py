from __future__ import annotations

import typing

from reuse_vr.errors import ParameterRangeError
from reuse_vr.framework import LoopType, RunRecord

from .. import mdp


def amdp_discount(eps: float, t_mix_bound: float) -> float:
    """
    gamma = 1 - eps / (9 t_mix).

    >>> round(amdp_discount(0.09, 1.0), 12)
    0.99
    """
    if not t_mix_bound > 0:
        raise ParameterRangeError('t_mix_bound', t_mix_bound, 't_mix_bound > 0')

    if not 0 < eps < 9 * t_mix_bound:
        raise ParameterRangeError('eps', eps, f'0 < eps < 9 t_mix = {9 * t_mix_bound}')

    return 1 - eps / (9 * t_mix_bound)


def amdp_solve(
        m: mdp.Dmdp,
        eps: float,
        t_mix_bound: float,
        gamma_prime: typing.Optional[float] = None,
        delta: float = 0.1,
        mode = LoopType.REUSE,
        master_seed: int = 0,
        exact_inner: bool = False,
        settings = None,
        ) -> typing.Tuple[mdp.Policy, RunRecord]:
    """
    An eps-optimal policy of the average-reward problem, as an eps / (3 (1 - gamma))-optimal
    policy of the gamma-discounted problem with gamma from :func:`amdp_discount`.

    The discount of ``m`` is ignored. ``gamma_prime`` defaults to the runtime profile's choice.
    """
    gamma = amdp_discount(eps, t_mix_bound)
    discounted = m.with_gamma(gamma)
    accuracy = eps / (3 * (1 - gamma))

    if gamma_prime is None:
        gamma_prime = mdp.runtime_profile(discounted, accuracy, mode, delta, settings).gamma_prime

    _, policy, record = mdp.prm_solve(
        discounted,
        accuracy,
        gamma_prime,
        delta = delta,
        mode = mode,
        master_seed = master_seed,
        exact_inner = exact_inner,
        settings = settings,
        )

    record.plan['amdp'] = {'eps': eps, 't_mix_bound': t_mix_bound, 'gamma': gamma}
    return policy, record
