from __future__ import annotations

import time
import typing

from .. import tracers

if typing.TYPE_CHECKING:
    from reuse_vr.oracles import LedgerSnapshot


class FullTracer:
    """Builds one tree of :class:`TraceNode` per outer iteration."""

    _simple_tracer: tracers.SimpleTracer
    _trees: typing.List[tracers.TraceNode]
    _current_node: typing.Optional[tracers.TraceNode]

    def __init__(self) -> None:
        self._simple_tracer = tracers.SimpleTracer()
        self._trees = []
        self._current_node = None

    def record_step_start(self, name: str, iteration: int, ledger: LedgerSnapshot) -> None:
        self._simple_tracer.record_step_start(name, iteration, ledger)
        node = tracers.TraceNode(
            name = name,
            iteration = iteration,
            parent = self._current_node,
            ledger_start = ledger,
            start = self._get_time_in_sec(),
            )

        if self._current_node is None:
            self._trees.append(node)

        else:
            self._current_node.append_child(node)

        self._current_node = node

    def record_step_end(self, ledger: LedgerSnapshot) -> None:
        self._simple_tracer.record_step_end(ledger)

        if self._current_node is not None:
            self._current_node.end = self._get_time_in_sec()
            self._current_node.ledger_end = ledger
            self._current_node = self._current_node.parent

    @property
    def stack(self):
        return self._simple_tracer.stack

    @property
    def trees(self) -> typing.List[tracers.TraceNode]:
        return self._trees

    @property
    def performance_log(self) -> tracers.PerformanceLog:
        return tracers.PerformanceLog(self)

    def _get_time_in_sec(self) -> float:
        return time.time_ns() / (10**9)

    def generate_performance_tables(self, dir_path: str) -> None:
        self.performance_log.generate_performance_tables(dir_path)

    def browse_trace(self) -> typing.Iterator[tracers.TraceNode]:

        def _browse_node(node):
            yield node

            for child in node.children:
                yield from _browse_node(child)

        for node in self._trees:
            yield from _browse_node(node)

    def get_nb_steps(self, name: str) -> int:
        return sum(1 for node in self.browse_trace() if node.name == name)
