from __future__ import annotations

import dataclasses

from .. import diagnostics


@dataclasses.dataclass(frozen = True)
class CompositionReport:
    """Fresh-seed against fixed-seed TV of a T-fold composition, next to the 2T(delta + eps) bound."""

    contract: str
    T: int
    eps: float
    delta: float
    estimate: diagnostics.TvEstimate

    @property
    def bound(self) -> float:
        return 2 * self.T * (self.delta + self.eps)

    @property
    def holds(self) -> bool:
        return self.estimate.point_estimate <= self.bound + self.estimate.half_width

    def to_dict(self) -> dict:
        return {
            'contract': self.contract,
            'T': self.T,
            'eps': self.eps,
            'delta': self.delta,
            'bound': self.bound,
            'holds': self.holds,
            'estimate': self.estimate.to_dict(),
            }
