from __future__ import annotations

import logging
import typing

import numpy

from reuse_vr.errors import DimensionMismatchError
from reuse_vr.randomness import RandomStreams

from .. import diagnostics

log = logging.getLogger(__name__)

Sampler = typing.Callable[[numpy.random.Generator, int], typing.Any]


def plug_in_tv(p_counts, q_counts) -> float:
    """
    1/2 sum_b |p_b - q_b| over the empirical frequencies of two histograms.

    >>> plug_in_tv([2, 0], [1, 1])
    0.5
    """
    p_counts = numpy.asarray(p_counts, dtype = float)
    q_counts = numpy.asarray(q_counts, dtype = float)
    return 0.5 * float(numpy.abs(p_counts / p_counts.sum() - q_counts / q_counts.sum()).sum())


def _replicate_tv(rng, n_p, p_freq, n_q, q_freq, replicates) -> numpy.ndarray:
    p = rng.multinomial(n_p, p_freq, size = replicates) / n_p
    q = rng.multinomial(n_q, q_freq, size = replicates) / n_q
    return 0.5 * numpy.abs(p - q).sum(axis = 1)


def tv_from_samples(
        p_samples,
        q_samples,
        bins: typing.Optional[int] = None,
        box: typing.Optional[typing.Tuple[typing.Any, typing.Any]] = None,
        rng: typing.Optional[numpy.random.Generator] = None,
        settings = None,
        ) -> diagnostics.TvEstimate:
    """
    Binned TV estimate of two collected samples.

    The half-width adds the bootstrap half-width of the plug-in estimate and the ``confidence``
    quantile of the plug-in estimate when both samples come from their pooled histogram, the bias
    floor of the estimator on identical distributions.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    diagnostics_settings = settings.diagnostics
    p_samples = diagnostics.as_samples(p_samples, 'p')
    q_samples = diagnostics.as_samples(q_samples, 'q')

    if p_samples.shape[1] != q_samples.shape[1]:
        raise DimensionMismatchError('q', p_samples.shape[1], q_samples.shape[1])

    bins = bins or diagnostics_settings.bins

    if box is None:
        binning = diagnostics.Binning.covering(p_samples, q_samples, bins = bins)
    else:
        binning = diagnostics.Binning(low = box[0], high = box[1], bins = bins)
        binning.check(p_samples, 'p')
        binning.check(q_samples, 'q')

    rng = rng if rng is not None else RandomStreams(0).generator('bootstrap')
    p_counts = binning.counts(p_samples)
    q_counts = binning.counts(q_samples)
    n_p, n_q = p_samples.shape[0], q_samples.shape[0]
    point = plug_in_tv(p_counts, q_counts)

    replicates = diagnostics_settings.bootstrap_replicates
    confidence = diagnostics_settings.tv_confidence
    bootstrap = _replicate_tv(rng, n_p, p_counts / n_p, n_q, q_counts / n_q, replicates)
    pooled = (p_counts + q_counts) / (n_p + n_q)
    null = _replicate_tv(rng, n_p, pooled, n_q, pooled, replicates)
    half_width = float(numpy.quantile(numpy.abs(bootstrap - point), confidence) + numpy.quantile(null, confidence))

    return diagnostics.TvEstimate(
        point_estimate = point,
        half_width = min(half_width, 1.0),
        n_samples = min(n_p, n_q),
        binning = binning,
        confidence = confidence,
        )


def tv_estimate(
        sampler_p: Sampler,
        sampler_q: Sampler,
        n: int,
        bins: typing.Optional[int] = None,
        box = None,
        master_seed: int = 0,
        settings = None,
        ) -> diagnostics.TvEstimate:
    """
    Draw ``n`` values from each sampler and estimate their TV distance.

    A sampler is called as ``sampler(rng, n)`` and returns n scalars or an (n, p) array with p <= 2.
    With ``box``, values outside it raise :class:`BoxViolationError`; otherwise the box covers both samples.
    """
    streams = RandomStreams(master_seed)
    p_samples = sampler_p(streams.generator('p'), n)
    q_samples = sampler_q(streams.generator('q'), n)
    estimate = tv_from_samples(p_samples, q_samples, bins, box, streams.generator('bootstrap'), settings)
    log.debug("tv estimate %.4f +- %.4f over %d cells", estimate.point_estimate, estimate.half_width, estimate.binning.cells)
    return estimate
