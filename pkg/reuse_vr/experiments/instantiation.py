from __future__ import annotations

import dataclasses
import typing

from reuse_vr.framework import LoopType
from reuse_vr.oracles import LedgerSnapshot

Solve = typing.Callable[[float, LoopType, int], typing.Tuple[LedgerSnapshot, float, dict]]


@dataclasses.dataclass(frozen = True)
class Instantiation:
    """
    A solver bound to one problem, as the experiment harness drives it.

    ``solve(knob, mode, master_seed)`` returns the run's ledger, its error against the problem's
    reference solution and JSON-able details; a trial succeeds when the error is at most ``tolerance``.
    """

    name: str
    knob: str
    default_knobs: typing.Tuple[float, ...]
    check: typing.Callable[[float], None]
    solve: Solve
    tolerance: float
