from __future__ import annotations

import logging
import typing

import numpy
import scipy.linalg

from reuse_vr.errors import ConvergenceError, ParameterRangeError, SizeCapError

from .. import mdp

log = logging.getLogger(__name__)


def policy_value(m: mdp.Dmdp, policy: mdp.Policy, gamma: typing.Optional[float] = None, rewards = None) -> numpy.ndarray:
    """v^pi, the solution of (I - gamma P^pi) v = r^pi."""
    gamma = m.gamma if gamma is None else gamma
    rewards = m.rewards if rewards is None else numpy.asarray(rewards, dtype = float)
    pairs = policy.pairs(m)
    system = numpy.eye(m.n_states) - gamma * m.transitions[pairs].toarray()
    return scipy.linalg.solve(system, rewards[pairs])


def exact_solve(
        m: mdp.Dmdp,
        gamma: typing.Optional[float] = None,
        rewards = None,
        settings = None,
        ) -> typing.Tuple[numpy.ndarray, mdp.Policy]:
    """
    Optimal value and policy by policy iteration with dense policy evaluation.

    A policy only switches action on a strict improvement, so the iteration stops at a fixed point.
    The returned policy takes the lowest action index among the optimal ones.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    mdp_settings = settings.mdp
    gamma = m.gamma if gamma is None else gamma
    rewards = m.rewards if rewards is None else numpy.asarray(rewards, dtype = float)

    if m.n_pairs > mdp_settings.exact_size_cap:
        raise SizeCapError('The state-action table', m.n_pairs, mdp_settings.exact_size_cap)

    if not 0 < gamma < 1:
        raise ParameterRangeError('gamma', gamma, '0 < gamma < 1')

    _, policy = mdp.bellman_apply(m, numpy.zeros(m.n_states), gamma = gamma, rewards = rewards)

    for iteration in range(mdp_settings.exact_max_iterations):
        values = policy_value(m, policy, gamma, rewards)
        q = mdp.q_values(m, values, gamma = gamma, rewards = rewards)
        best, candidate = mdp.greedy(m, q)
        current = q[policy.pairs(m)]
        improved = best > current + 1e-12 * (1 + numpy.abs(current))

        if not improved.any():
            break

        policy = mdp.Policy(numpy.where(improved, candidate.actions, policy.actions))

    else:
        raise ConvergenceError('policy iteration', mdp_settings.exact_max_iterations, float('nan'), 0.0)

    q = mdp.q_values(m, values, gamma = gamma, rewards = rewards)
    best, policy = mdp.greedy(m, q, tolerance = 1e-9 * (1 + float(numpy.abs(values).max())))
    residual = float(numpy.abs(best - values).max())
    tolerance = mdp_settings.exact_residual_tolerance * max(1.0, float(numpy.abs(values).max()))

    if residual > tolerance:
        raise ConvergenceError('policy iteration', iteration + 1, residual, tolerance)

    log.debug("policy iteration converged after %d iterations", iteration + 1)
    return values, policy


def average_reward(m: mdp.Dmdp, policy: mdp.Policy, rewards = None) -> float:
    """
    Gain of ``policy``: its stationary distribution weighted by its rewards.

    The chain induced by the policy is assumed unichain.
    """
    rewards = m.rewards if rewards is None else numpy.asarray(rewards, dtype = float)
    pairs = policy.pairs(m)
    chain = m.transitions[pairs].toarray()
    n = m.n_states
    system = numpy.vstack([chain.T - numpy.eye(n), numpy.ones((1, n))])
    target = numpy.zeros(n + 1)
    target[-1] = 1.0
    stationary, *_ = numpy.linalg.lstsq(system, target, rcond = None)
    return float(stationary @ rewards[pairs])


def sub_reward(m: mdp.Dmdp, gamma_prime: float, v, bundle = None) -> numpy.ndarray:
    """
    r' = r - (gamma' - gamma) P v, the reward of the gamma'-discounted sub-problem anchored at v.

    >>> m = mdp.Dmdp.from_dense([[1.0]], [1.0], 0.9, [1])
    >>> round(float(sub_reward(m, 0.5, [2.0])[0]), 12)
    1.8
    """
    if not 0 < gamma_prime <= m.gamma:
        raise ParameterRangeError('gamma_prime', gamma_prime, f'0 < gamma_prime <= gamma = {m.gamma}')

    v = numpy.asarray(v, dtype = float)
    expected = bundle.batch_query(v) if bundle is not None else m.transitions @ v
    return m.rewards - (gamma_prime - m.gamma) * expected
