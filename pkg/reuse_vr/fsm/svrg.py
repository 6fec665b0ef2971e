from __future__ import annotations

import dataclasses
import logging
import math
import typing

import numpy

from reuse_vr.errors import ParameterRangeError

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen = True)
class SvrgSchedule:
    step: float
    epoch_length: int
    n_epochs: int
    smoothness: float
    strong_convexity: float
    accuracy: float

    @property
    def length(self) -> int:
        """Number of seed records one run consumes."""
        return self.epoch_length * self.n_epochs

    def to_dict(self) -> dict:
        return {**dataclasses.asdict(self), 'length': self.length}


def svrg_schedule(
        finite_sum,
        lam: float,
        c: float,
        delta: float,
        probabilities: typing.Optional[numpy.ndarray] = None,
        settings = None,
        ) -> SvrgSchedule:
    """
    Step, epoch length and number of epochs for relative accuracy ``c`` with failure probability ``delta``
    on F + lam/2 |x - y|^2.

    Components may be nonconvex (``finite_sum.convex_components`` false); the effective smoothness
    then comes from the second moment of the importance-weighted gradient differences.

    Each epoch contracts the expected gap by 2^(-1 / m), m = ``svrg_epoch_multiplier``. After
    ``n_epochs`` it is at most delta / c of the initial gap and Markov's inequality gives the 1 / c
    contract with probability 1 - delta. The last iterate is returned; there is no median-of-trials.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()

    if not lam >= 0:
        raise ParameterRangeError('lambda', lam, 'lambda >= 0')

    if not 0 < delta < 1:
        raise ParameterRangeError('delta', delta, '0 < delta < 1')

    n = finite_sum.n
    smoothness = numpy.asarray(finite_sum.smoothness, dtype = float)
    probabilities = numpy.full(n, 1.0 / n) if probabilities is None else numpy.asarray(probabilities, dtype = float)
    support = probabilities > 0
    strong_convexity = finite_sum.mu + lam

    if finite_sum.convex_components:
        effective = float((smoothness[support] / (n * probabilities[support])).max()) + lam
    else:
        second_moment = float((smoothness[support] ** 2 / (n ** 2 * probabilities[support])).sum())
        effective = max(second_moment / strong_convexity, math.sqrt(second_moment)) + lam

    fsm_settings = settings.fsm

    return SvrgSchedule(
        step = 1 / (fsm_settings.svrg_step_factor * effective),
        epoch_length = math.ceil(fsm_settings.svrg_epoch_factor * effective / strong_convexity),
        n_epochs = math.ceil(fsm_settings.svrg_epoch_multiplier * math.log2(max(c, 1.0) / delta)) + 1,
        smoothness = effective,
        strong_convexity = strong_convexity,
        accuracy = c,
        )


def run_svrg(
        bundle,
        y: numpy.ndarray,
        lam: float,
        records: numpy.ndarray,
        probabilities: numpy.ndarray,
        schedule: SvrgSchedule,
        ) -> numpy.ndarray:
    """
    SVRG on F + lam/2 |x - y|^2 started at ``y``, consuming the first ``schedule.length`` records.

    Every epoch makes one batch query at its anchor; every step evaluates the component of the
    next record at the iterate and at the anchor, weighted by 1 / (n p_i). The epoch output is
    its last iterate.
    """
    n = len(probabilities)
    weights = numpy.zeros(n)
    support = probabilities > 0
    weights[support] = 1 / (n * probabilities[support])
    x = numpy.array(y, dtype = float)
    position = 0

    for epoch in range(schedule.n_epochs):
        anchor = x.copy()
        anchor_gradient = bundle.batch_query(anchor)
        anchor_components: typing.Dict[int, numpy.ndarray] = {}

        for _ in range(schedule.epoch_length):
            index = int(records[position])
            position += 1
            component = bundle.sample_query(index)

            if index not in anchor_components:
                anchor_components[index] = component(anchor)

            estimate = (component(x) - anchor_components[index]) * weights[index] + anchor_gradient + lam * (x - y)
            x = x - schedule.step * estimate

    log.debug("svrg consumed %d records over %d epochs", position, schedule.n_epochs)
    return x
