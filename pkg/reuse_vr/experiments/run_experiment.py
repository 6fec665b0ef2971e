from __future__ import annotations

import csv
import itertools
import json
import logging
import multiprocessing.pool
import os
import typing

import numpy

from reuse_vr.diagnostics import TrialReport, pseudoindependence_probe, success_harness
from reuse_vr.errors import ProblemValidationError
from reuse_vr.oracles import ComponentOracle

from .. import experiments, fsm

log = logging.getLogger(__name__)


def _row(knob: float, mode, report: TrialReport, timings: bool) -> experiments.SweepRow:
    outcomes = report.outcomes

    def mean_count(name):
        return int(round(numpy.mean([getattr(outcome.ledger, name) for outcome in outcomes])))

    return experiments.SweepRow(
        knob = knob,
        mode = mode.value,
        batch = mean_count('batch'),
        sample = mean_count('sample'),
        distinct = mean_count('distinct'),
        success_lcb = report.lower_bound,
        mean_err = float(numpy.mean([outcome.error for outcome in outcomes])),
        secs = float(numpy.mean([outcome.secs for outcome in outcomes])) if timings else None,
        )


def run_cells(cfg: experiments.ExperimentConfig, settings = None) -> typing.List[typing.Tuple[float, typing.Any, TrialReport]]:
    """
    Run every knob x mode cell of ``cfg`` through the success harness.

    With ``cfg.workers`` above 1, cells run in a thread pool; results keep the grid order.
    """
    command = cfg.solver
    problem = experiments.load_problem(command, cfg.problem)
    solver = experiments.instantiation(command, problem, cfg, settings)
    knobs = cfg.knobs or solver.default_knobs

    for knob in knobs:
        solver.check(knob)

    cells = list(itertools.product(knobs, cfg.modes))

    def run_cell(cell):
        knob, mode = cell
        log.info("%s: %s = %.6g, mode %s", solver.name, solver.knob, knob, mode.value)
        report = success_harness(
            experiments.cell_runner(solver, knob, mode),
            lambda outcome: outcome.success,
            cfg.trials,
            master_seed = cfg.master_seed,
            criterion_id = f"{solver.name} error <= {solver.tolerance:.3g}",
            settings = settings,
            )
        return knob, mode, report

    if cfg.workers == 1:
        return [run_cell(cell) for cell in cells]

    with multiprocessing.pool.ThreadPool(min(cfg.workers, len(cells))) as pool:
        return pool.map(run_cell, cells)


def write_rows(rows: typing.Sequence[experiments.SweepRow], path: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok = True)

    with open(path, 'w', newline = '') as file:
        writer = csv.DictWriter(file, fieldnames = experiments.HEADER)
        writer.writeheader()

        for row in rows:
            writer.writerow(row.to_csv())


def write_sidecar(cfg: experiments.ExperimentConfig, rows, cells, path: str) -> None:
    """The full configuration, the rows, and every trial's ledger and error."""
    payload = {
        'config': cfg.to_dict(),
        'rows': [row.to_dict() for row in rows],
        'cells': [
            {
                'knob': knob,
                'mode': mode.value,
                'report': report.to_dict(),
                'trials': [outcome.to_dict() for outcome in report.outcomes],
                }
            for knob, mode, report
            in cells
            ],
        }

    with open(path, 'w') as file:
        json.dump(payload, file, indent = 2)


def run_experiment(cfg: experiments.ExperimentConfig, settings = None) -> typing.List[experiments.SweepRow]:
    """
    One SweepRow per knob x mode cell, written to ``cfg.out`` as CSV with a JSON sidecar when set.

    Without ``cfg.timings`` the secs column stays empty, so that equal configurations give equal files.
    """
    cells = run_cells(cfg, settings)
    rows = [_row(knob, mode, report, cfg.timings) for knob, mode, report in cells]

    if cfg.out is not None:
        write_rows(rows, cfg.out)
        write_sidecar(cfg, rows, cells, cfg.sidecar)
        log.info("wrote %d rows to %s", len(rows), cfg.out)

    return rows


def run_tvcheck(cfg: experiments.ExperimentConfig, settings = None) -> dict:
    """
    Pseudo-independence probe of the noisy high-precision SVRG sub-solver of an APP run on a
    one-dimensional problem (by default the builtin scalar ridge), at the run's first iterate.
    """
    problem = experiments.load_problem(experiments.Command.TVCHECK, cfg.problem or experiments.BUILTIN + 'scalar')

    if problem.dim != 1:
        raise ProblemValidationError([(['tvcheck', 'problem'], f"probes need a one-dimensional problem, got d = {problem.dim}")])

    lam = cfg.knobs[0] if cfg.knobs else problem.mu
    x0 = numpy.zeros(problem.dim)
    bundle = ComponentOracle(problem)
    gradient_norm = float(numpy.linalg.norm(problem.gradient(x0)))
    spec = fsm.uniform_seed_spec(problem, 1)
    plan = fsm.app_plan(problem, gradient_norm, cfg.c, lam, cfg.delta, spec.probabilities, settings)
    contract = fsm.app_contract(problem, bundle, plan, spec.with_length(plan.seed_length), settings)
    u = fsm.AppState(x = x0, v = numpy.zeros(problem.dim), lam = lam, mu = problem.mu).pack()
    report = pseudoindependence_probe(contract, u, plan.tau, cfg.n_seeds, cfg.n_inner, bundle = bundle, master_seed = cfg.master_seed, settings = settings)
    result = report.to_dict()

    if cfg.out is not None:
        with open(cfg.out, 'w') as file:
            json.dump(result, file, indent = 2)

    return result
