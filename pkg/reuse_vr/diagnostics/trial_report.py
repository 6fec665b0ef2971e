from __future__ import annotations

import dataclasses
import typing


@dataclasses.dataclass(frozen = True)
class TrialReport:
    """Outcome counts of repeated seeded trials, with an exact one-sided lower confidence bound."""

    n_trials: int
    n_success: int
    criterion: str
    lower_bound: float
    confidence: float
    outcomes: typing.List[typing.Any] = dataclasses.field(default_factory = list, compare = False, repr = False)

    @property
    def success_rate(self) -> float:
        return self.n_success / self.n_trials if self.n_trials else 0.0

    def to_dict(self) -> dict:
        return {
            'n_trials': self.n_trials,
            'n_success': self.n_success,
            'criterion': self.criterion,
            'success_rate': self.success_rate,
            'lower_bound': self.lower_bound,
            'confidence': self.confidence,
            }
