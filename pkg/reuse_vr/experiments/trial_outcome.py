from __future__ import annotations

import dataclasses

from reuse_vr.oracles import LedgerSnapshot


@dataclasses.dataclass(frozen = True)
class TrialOutcome:
    ledger: LedgerSnapshot
    error: float
    success: bool
    secs: float
    details: dict = dataclasses.field(default_factory = dict)

    def to_dict(self) -> dict:
        return {
            'ledger': self.ledger.to_dict(),
            'error': self.error,
            'success': self.success,
            'secs': self.secs,
            'details': self.details,
            }
