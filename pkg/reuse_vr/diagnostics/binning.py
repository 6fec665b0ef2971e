from __future__ import annotations

import dataclasses

import numpy

from reuse_vr.errors import BinningError, BoxViolationError

MAX_DIMENSIONS = 2


def as_samples(values, name: str) -> numpy.ndarray:
    """Samples as an (n, p) float array; scalars per draw become one column."""
    samples = numpy.asarray(values, dtype = float)

    if samples.ndim == 1:
        samples = samples[:, None]

    if samples.ndim != 2 or samples.shape[0] == 0:
        raise BinningError(f"Samples of '{name}' must be a non-empty (n, p) array, got shape {samples.shape}.")

    if samples.shape[1] > MAX_DIMENSIONS:
        message = [
            f"Samples of '{name}' have {samples.shape[1]} dimensions;",
            f"binned TV estimates are only computed up to {MAX_DIMENSIONS} dimensions.",
            ]
        raise BinningError(" ".join(message))

    return samples


@dataclasses.dataclass(frozen = True)
class Binning:
    """
    A regular grid of ``bins`` cells per axis over the box [low, high].

        >>> Binning(low = [0.0], high = [1.0], bins = 4).counts([[0.1], [0.3], [0.35], [1.0]]).tolist()
        [1, 2, 0, 1]
    """

    low: numpy.ndarray
    high: numpy.ndarray
    bins: int

    def __post_init__(self) -> None:
        low = numpy.atleast_1d(numpy.asarray(self.low, dtype = float))
        high = numpy.atleast_1d(numpy.asarray(self.high, dtype = float))

        if low.shape != high.shape or not (high > low).all():
            raise BinningError(f"Empty box [{low.tolist()}, {high.tolist()}].")

        if low.size > MAX_DIMENSIONS or int(self.bins) < 1:
            raise BinningError(f"Cannot bin {low.size} dimensions with {self.bins} bins per axis.")

        object.__setattr__(self, 'low', low)
        object.__setattr__(self, 'high', high)
        object.__setattr__(self, 'bins', int(self.bins))

    @classmethod
    def covering(cls, *samples: numpy.ndarray, bins: int) -> Binning:
        """The tightest box around all ``samples``, widened by 1/2 on axes where they are constant."""
        pooled = numpy.concatenate(samples)
        low = pooled.min(axis = 0)
        high = pooled.max(axis = 0)
        flat = high <= low
        return cls(low = numpy.where(flat, low - 0.5, low), high = numpy.where(flat, high + 0.5, high), bins = bins)

    @property
    def dim(self) -> int:
        return self.low.size

    @property
    def cells(self) -> int:
        return self.bins ** self.dim

    def check(self, samples: numpy.ndarray, name: str) -> None:
        inside = numpy.isfinite(samples).all(axis = 1) & (samples >= self.low).all(axis = 1) & (samples <= self.high).all(axis = 1)

        if not inside.all():
            offending = samples[numpy.argmin(inside)].tolist()
            raise BoxViolationError(name, self.low.tolist(), self.high.tolist(), offending)

    def counts(self, samples) -> numpy.ndarray:
        samples = numpy.asarray(samples, dtype = float).reshape(-1, self.dim)
        scaled = (samples - self.low) / (self.high - self.low) * self.bins
        index = numpy.clip(numpy.floor(scaled).astype(int), 0, self.bins - 1)
        flat = numpy.ravel_multi_index(index.T, (self.bins,) * self.dim)
        return numpy.bincount(flat, minlength = self.cells)

    def to_dict(self) -> dict:
        return {'low': self.low.tolist(), 'high': self.high.tolist(), 'bins': self.bins}
