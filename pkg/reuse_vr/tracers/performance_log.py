from __future__ import annotations

import csv
import itertools
import os
import typing

from .. import tracers


class PerformanceLog:

    def __init__(self, full_tracer: tracers.FullTracer) -> None:
        self._full_tracer = full_tracer

    def rows(self) -> typing.List[dict]:
        return [
            {
                'name': node.key,
                'step_time': node.step_time(),
                'own_time': node.own_time(),
                **node.ledger_delta().to_dict(),
                }
            for node
            in self._full_tracer.browse_trace()
            ]

    def aggregate(self, rows: typing.List[dict]) -> typing.Dict[str, dict]:

        def _aggregate(steps: list) -> dict:
            count = len(steps)
            step_time = sum(step['step_time'] for step in steps)

            return {
                'count': count,
                'step_time': tracers.TraceNode.round(step_time),
                'avg_step_time': tracers.TraceNode.round(step_time / count),
                'batch': sum(step['batch'] for step in steps),
                'sample': sum(step['sample'] for step in steps),
                }

        def _groupby(row: dict) -> str:
            return row['name'].split('<')[0]

        return {
            name: _aggregate(list(steps))
            for name, steps
            in itertools.groupby(sorted(rows, key = _groupby), _groupby)
            }

    def generate_performance_tables(self, dir_path: str) -> None:
        rows = self.rows()
        self._write_csv(os.path.join(dir_path, 'performance_table.csv'), rows)

        aggregated_rows = [
            {'name': name, **values}
            for name, values
            in self.aggregate(rows).items()
            ]

        self._write_csv(os.path.join(dir_path, 'aggregated_performance_table.csv'), aggregated_rows)

    def summary(self) -> dict:
        children = [self._json_tree(tree) for tree in self._full_tracer.trees]

        return {
            'name': 'All iterations',
            'value': sum(child['value'] for child in children),
            'children': children,
            }

    def _json_tree(self, tree: tracers.TraceNode) -> dict:
        return {
            'name': tree.key,
            'value': tree.step_time(),
            'ledger': tree.ledger_delta().to_dict(),
            'children': [self._json_tree(child) for child in tree.children],
            }

    def _write_csv(self, path: str, rows: typing.List[dict]) -> None:
        if not rows:
            return

        with open(path, 'w', newline = '') as csv_file:
            writer = csv.DictWriter(csv_file, fieldnames = list(rows[0].keys()))
            writer.writeheader()

            for row in rows:
                writer.writerow(row)
