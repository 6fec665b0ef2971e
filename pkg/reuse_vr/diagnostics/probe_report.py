from __future__ import annotations

import dataclasses
import typing

import numpy

from .. import diagnostics


@dataclasses.dataclass(frozen = True)
class ProbeReport:
    """Per-seed TV distances between a noisy sub-solver with a fixed seed and its smoothed target."""

    contract: str
    tau: float
    eps: float
    seeds: typing.List[str]
    estimates: typing.List[diagnostics.TvEstimate]

    @property
    def exceeding(self) -> numpy.ndarray:
        """Seeds whose estimate exceeds eps beyond its half-width."""
        return numpy.array([estimate.point_estimate > self.eps + estimate.half_width for estimate in self.estimates])

    @property
    def delta_hat(self) -> float:
        return float(self.exceeding.mean())

    @property
    def eps_hat(self) -> float:
        """Largest point estimate over the compliant seeds."""
        compliant = [estimate.point_estimate for estimate, over in zip(self.estimates, self.exceeding) if not over]
        return max(compliant or [estimate.point_estimate for estimate in self.estimates])

    def to_dict(self) -> dict:
        return {
            'contract': self.contract,
            'tau': self.tau,
            'eps': self.eps,
            'eps_hat': self.eps_hat,
            'delta_hat': self.delta_hat,
            'seeds': [
                {'seed': seed, **estimate.to_dict()}
                for seed, estimate
                in zip(self.seeds, self.estimates)
                ],
            }
