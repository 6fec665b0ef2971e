from __future__ import annotations

import dataclasses
import logging
import math
import typing

import numpy

from reuse_vr.errors import ParameterRangeError, SeedTooShortError
from reuse_vr.framework import SeedSpec

from .. import mdp

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen = True)
class VrviSchedule:
    """
    Epochs of variance-reduced value iteration: each epoch recentres at an anchor with one exact
    P v-bar, then runs ``iterations`` sampled steps using ``samples`` successors per pair.
    """

    n_epochs: int
    iterations: int
    samples: int
    n_pairs: int
    value_range: float
    accuracy: float
    confidence: float

    @property
    def length(self) -> int:
        """Seed rows consumed: one successor per pair and row."""
        return self.n_epochs * self.iterations * self.samples

    @property
    def sample_queries(self) -> int:
        return self.length * self.n_pairs

    def to_dict(self) -> dict:
        return {**dataclasses.asdict(self), 'length': self.length}


def vrvi_schedule(
        n_pairs: int,
        gamma_prime: float,
        accuracy: float,
        delta: float,
        value_range: float,
        settings = None,
        ) -> VrviSchedule:
    """
    Schedule reaching |v - v*|_inf <= ``accuracy`` from v = 0 when v* lies in [0, ``value_range``].

    Every epoch halves the distance to v*: ``iterations`` = ceil(log 4 / (1 - gamma')) contracts the
    anchored error by 4 and the Hoeffding corrections of ``samples`` successors cost at most as much again.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()

    if not 0 < gamma_prime < 1:
        raise ParameterRangeError('gamma_prime', gamma_prime, '0 < gamma_prime < 1')

    if not accuracy > 0:
        raise ParameterRangeError('accuracy', accuracy, 'accuracy > 0')

    if not 0 < delta < 1:
        raise ParameterRangeError('delta', delta, '0 < delta < 1')

    mdp_settings = settings.mdp
    n_epochs = max(0, math.ceil(math.log2(max(value_range, accuracy) / accuracy))) + mdp_settings.vrvi_epoch_slack
    iterations = math.ceil(math.log(4) / (1 - gamma_prime))
    confidence = math.log(2 * n_pairs * n_epochs * iterations / delta)
    samples = max(1, math.ceil(mdp_settings.vrvi_sample_constant * gamma_prime ** 2 * confidence / (1 - gamma_prime) ** 2))

    return VrviSchedule(
        n_epochs = n_epochs,
        iterations = iterations,
        samples = samples,
        n_pairs = n_pairs,
        value_range = value_range,
        accuracy = accuracy,
        confidence = confidence,
        )


def vrvi_seed_spec(m: mdp.Dmdp, length: int) -> SeedSpec:
    """Seeds of ``length`` rows holding one simulated successor of every state-action pair."""
    pairs = numpy.arange(m.n_pairs)

    def draw_records(bundle, rng, size):
        return bundle.simulate(numpy.tile(pairs, size), rng).reshape(size, m.n_pairs)

    return SeedSpec(dist_id = f"successors[{m.n_pairs}]", length = int(length), draw_records = draw_records)


@dataclasses.dataclass
class VrviResult:
    values: numpy.ndarray
    policy: mdp.Policy
    upper: float


def run_vrvi(
        m: mdp.Dmdp,
        bundle,
        gamma_prime: float,
        rewards: numpy.ndarray,
        records: numpy.ndarray,
        schedule: VrviSchedule,
        ) -> VrviResult:
    """
    Monotone value iteration from below on the (gamma', ``rewards``) problem.

    Every step estimates P w as P v-bar plus the seed mean of w - v-bar, lowered by its Hoeffding
    width, so with high probability the Bellman estimate stays below T[w]. Values only increase and
    are truncated at max r' / (1 - gamma'); the policy of a state changes only when its value does.
    """
    upper = float(rewards.max()) / (1 - gamma_prime) if len(rewards) else 0.0
    values = numpy.zeros(m.n_states)
    _, policy = mdp.greedy(m, rewards)
    actions = numpy.asarray(policy.actions)
    width = math.sqrt(schedule.confidence / (2 * schedule.samples))
    row = 0

    for epoch in range(schedule.n_epochs):
        anchor = values.copy()
        anchored = bundle.batch_query(anchor)

        for _ in range(schedule.iterations):
            successors = records[row:row + schedule.samples]
            row += schedule.samples
            difference = values - anchor
            correction = float(numpy.abs(difference).max()) * width
            expected = anchored + difference[successors].mean(axis = 0) - correction
            best, candidate = mdp.greedy(m, rewards + gamma_prime * expected)
            best = numpy.minimum(best, upper)
            improved = best > values
            values = numpy.where(improved, best, values)
            actions = numpy.where(improved, candidate.actions, actions)

        log.debug("vrvi epoch %d/%d: max value %.6g", epoch + 1, schedule.n_epochs, float(values.max()))

    return VrviResult(values = values, policy = mdp.Policy(actions), upper = upper)


def _prepare(m, bundle, gamma_prime, v_anchor, eps, delta, seed, value_range, settings):
    if not 0 < gamma_prime < 1:
        raise ParameterRangeError('gamma_prime', gamma_prime, '0 < gamma_prime < 1')

    rewards = mdp.sub_reward(m, gamma_prime, v_anchor, bundle)
    value_range = float(rewards.max()) / (1 - gamma_prime) if value_range is None else value_range
    schedule = vrvi_schedule(m.n_pairs, gamma_prime, eps / 2, delta, value_range, settings)

    if len(seed) < schedule.length:
        raise SeedTooShortError('vrvi', schedule.length, len(seed))

    return rewards, schedule


def vrvi_subsolve(
        m: mdp.Dmdp,
        bundle,
        gamma_prime: float,
        v_anchor,
        eps: float,
        delta: float,
        seed,
        value_range: typing.Optional[float] = None,
        settings = None,
        ) -> numpy.ndarray:
    """
    With probability 1 - delta, |v - v*_{gamma', r'}|_inf <= eps / 2 for r' = ``sub_reward(m, gamma', v_anchor)``.

    ``value_range`` bounds v*_{gamma', r'} for the schedule; it defaults to max r' / (1 - gamma').
    """
    rewards, schedule = _prepare(m, bundle, gamma_prime, v_anchor, eps, delta, seed, value_range, settings)
    return run_vrvi(m, bundle, gamma_prime, rewards, seed.records, schedule).values


def vrvi_policy_subsolve(
        m: mdp.Dmdp,
        bundle,
        gamma_prime: float,
        v_anchor,
        eps: float,
        delta: float,
        seed,
        value_range: typing.Optional[float] = None,
        settings = None,
        ) -> typing.Tuple[numpy.ndarray, mdp.Policy]:
    """
    :func:`vrvi_subsolve` plus a policy pi with v <= v^pi_{gamma', r'}.

    One more batch query certifies v <= T^pi[v]: where the sampled lower bounds failed, the values
    are lowered by the largest violation over 1 - gamma', which restores the certificate.
    """
    rewards, schedule = _prepare(m, bundle, gamma_prime, v_anchor, eps, delta, seed, value_range, settings)
    result = run_vrvi(m, bundle, gamma_prime, rewards, seed.records, schedule)
    pairs = result.policy.pairs(m)
    backed_up = rewards[pairs] + gamma_prime * bundle.batch_query(result.values)[pairs]
    violation = max(float((result.values - backed_up).max()), 0.0)

    if violation > 0:
        log.warning("vrvi lower bound failed by %.3g; values lowered to keep the policy certificate", violation)

    return result.values - violation / (1 - gamma_prime), result.policy
