from __future__ import annotations

import typing

if typing.TYPE_CHECKING:
    from reuse_vr.oracles import LedgerSnapshot

    Stack = typing.List[typing.Dict[str, typing.Union[str, int]]]


class SimpleTracer:
    """Keeps the stack of open steps, nothing else."""

    _stack: Stack

    def __init__(self) -> None:
        self._stack = []

    def record_step_start(self, name: str, iteration: int, ledger: LedgerSnapshot) -> None:
        self.stack.append({'name': name, 'iteration': iteration})

    def record_step_end(self, ledger: LedgerSnapshot) -> None:
        self.stack.pop()

    @property
    def stack(self) -> Stack:
        return self._stack
