from __future__ import annotations

import logging
import typing

import scipy.stats

from reuse_vr.errors import ParameterRangeError
from reuse_vr.randomness import RandomStreams

from .. import diagnostics

log = logging.getLogger(__name__)


def clopper_pearson_lower(k: int, n: int, confidence: float = 0.95) -> float:
    """
    Exact one-sided lower confidence bound on a success probability after k successes in n trials.

    >>> round(clopper_pearson_lower(100, 100), 5)
    0.97049
    >>> clopper_pearson_lower(0, 10)
    0.0
    """
    if not 0 <= k <= n or n < 1:
        raise ParameterRangeError('k', k, f'0 <= k <= n = {n}, n >= 1')

    if not 0 < confidence < 1:
        raise ParameterRangeError('confidence', confidence, '0 < confidence < 1')

    if k == 0:
        return 0.0

    return float(scipy.stats.beta.ppf(1 - confidence, k, n - k + 1))


def success_harness(
        runner: typing.Callable[[RandomStreams], typing.Any],
        criterion: typing.Callable[[typing.Any], bool],
        n_trials: int,
        master_seed: int = 0,
        criterion_id: typing.Optional[str] = None,
        confidence: typing.Optional[float] = None,
        settings = None,
        ) -> diagnostics.TrialReport:
    """
    Run ``runner(streams)`` once per trial, each with the streams of its own trial index, and count
    the outcomes satisfying ``criterion``.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    confidence = confidence if confidence is not None else settings.diagnostics.success_confidence

    if n_trials < 1:
        raise ParameterRangeError('n_trials', n_trials, 'n_trials >= 1')

    streams = RandomStreams(master_seed)
    outcomes = [runner(streams.trial(index)) for index in range(n_trials)]
    n_success = sum(bool(criterion(outcome)) for outcome in outcomes)
    lower_bound = clopper_pearson_lower(n_success, n_trials, confidence)
    name = criterion_id or getattr(criterion, '__name__', 'criterion')
    log.info("%s: %d/%d successes, lower bound %.4f", name, n_success, n_trials, lower_bound)

    return diagnostics.TrialReport(
        n_trials = n_trials,
        n_success = n_success,
        criterion = name,
        lower_bound = lower_bound,
        confidence = confidence,
        outcomes = outcomes,
        )
