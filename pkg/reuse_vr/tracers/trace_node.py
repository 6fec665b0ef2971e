from __future__ import annotations

import dataclasses
import typing

from reuse_vr.oracles import LedgerSnapshot


@dataclasses.dataclass
class TraceNode:
    name: str
    iteration: int
    parent: typing.Optional[TraceNode] = None
    children: typing.List[TraceNode] = dataclasses.field(default_factory = list)
    ledger_start: LedgerSnapshot = dataclasses.field(default_factory = LedgerSnapshot)
    ledger_end: LedgerSnapshot = dataclasses.field(default_factory = LedgerSnapshot)
    start: float = 0
    end: float = 0

    @property
    def key(self) -> str:
        return f"{self.name}<{self.iteration}>"

    def step_time(self, round_: bool = True) -> float:
        result = self.end - self.start

        if round_:
            return self.round(result)

        return result

    def own_time(self) -> float:
        children_time = sum(child.step_time(round_ = False) for child in self.children)
        return self.round(self.step_time(round_ = False) - children_time)

    def ledger_delta(self) -> LedgerSnapshot:
        return self.ledger_end - self.ledger_start

    def append_child(self, node: TraceNode) -> None:
        self.children.append(node)

    @staticmethod
    def round(time: float) -> float:
        return float(f'{time:.4g}')  # 4 significant figures
