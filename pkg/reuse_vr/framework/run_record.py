from __future__ import annotations

import dataclasses
import typing

import numpy

from reuse_vr.oracles import LedgerSnapshot

from .. import framework


@dataclasses.dataclass
class RunRecord:
    config: framework.OuterConfig
    initial: numpy.ndarray
    iterates: typing.List[numpy.ndarray]
    output: numpy.ndarray
    ledger: LedgerSnapshot
    channels: typing.Dict[str, LedgerSnapshot]
    seeds_used: typing.List[str]
    wall_time: float
    plan: dict = dataclasses.field(default_factory = dict)

    @property
    def loop_type(self) -> framework.LoopType:
        return self.config.loop_type

    @property
    def distinct_seeds(self) -> int:
        return len(set(self.seeds_used))

    def to_dict(self, with_iterates: bool = False) -> dict:
        result = {
            'config': self.config.to_dict(),
            'output': numpy.asarray(self.output).tolist(),
            'ledger': self.ledger.to_dict(),
            'channels': {name: snapshot.to_dict() for name, snapshot in self.channels.items()},
            'seeds_used': list(self.seeds_used),
            'wall_time': self.wall_time,
            'plan': self.plan,
            }

        if with_iterates:
            result['initial'] = numpy.asarray(self.initial).tolist()
            result['iterates'] = [numpy.asarray(iterate).tolist() for iterate in self.iterates]

        return result
