from __future__ import annotations

import dataclasses

from .. import diagnostics


@dataclasses.dataclass(frozen = True)
class TvEstimate:
    """
    Plug-in total variation distance between two samples on a fixed binning.

    Binning merges events, so the binned distance never exceeds the true one: up to sampling error
    the point estimate is a lower bound. ``half_width`` is a confidence half-width at ``confidence``.
    """

    point_estimate: float
    half_width: float
    n_samples: int
    binning: diagnostics.Binning
    confidence: float

    direction = 'lower'

    @property
    def lower(self) -> float:
        return max(self.point_estimate - self.half_width, 0.0)

    @property
    def upper(self) -> float:
        return min(self.point_estimate + self.half_width, 1.0)

    def to_dict(self) -> dict:
        return {
            'point_estimate': self.point_estimate,
            'half_width': self.half_width,
            'n_samples': self.n_samples,
            'binning': self.binning.to_dict(),
            'confidence': self.confidence,
            'direction': self.direction,
            }
