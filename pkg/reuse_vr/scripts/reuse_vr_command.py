import argparse
import csv
import json
import logging
import sys

from reuse_vr.errors import ParameterRangeError, ProblemParsingError, ProblemValidationError
from reuse_vr.experiments import HEADER, Command, ExperimentConfig, run_experiment, run_tvcheck, validate_problem
from reuse_vr.settings import load_settings

"""
    Define the `reuse-vr` command line interface.
"""

log = logging.getLogger(__name__)


def _floats(value):
    return tuple(float(item) for item in value.split(',') if item.strip())


def _modes(value):
    return tuple(item.strip() for item in value.split(',') if item.strip())


def add_experiment_arguments(parser):
    parser.add_argument('--problem', action = 'store', help = "problem file or directory, or builtin:<name> (ridge, scalar, mdp, chain, game, topev)", type = str)
    parser.add_argument('--mode', action = 'store', help = "comma-separated loop modes among standard, noisy and reuse", type = _modes)
    parser.add_argument('--knob-grid', action = 'store', help = "comma-separated knob values (lambda, gamma' or alpha)", type = _floats)
    parser.add_argument('--eps', action = 'store', help = "target accuracy", type = float)
    parser.add_argument('--delta', action = 'store', help = "failure probability", type = float)
    parser.add_argument('--c', action = 'store', help = "relative accuracy of finite-sum runs", type = float)
    parser.add_argument('--trials', action = 'store', help = "trials per knob and mode", type = int)
    parser.add_argument('--seed', action = 'store', help = "master seed", type = int)
    parser.add_argument('--out', action = 'store', help = "CSV output path; a JSON sidecar is written next to it", type = str)
    parser.add_argument('--t-mix', action = 'store', help = "mixing time bound of average-reward problems", type = float)
    parser.add_argument('--exact-inner', action = 'store_true', default = None, help = "solve MDP sub-problems exactly")
    parser.add_argument('--workers', action = 'store', help = "cells run in parallel", type = int)
    parser.add_argument('--timings', action = 'store_true', default = None, help = "fill the secs column with wall times")
    parser.add_argument('--config', action = 'store', help = "experiment file (YAML or JSON); flags override it", type = str)
    parser.add_argument('--settings', action = 'store', help = "YAML file overriding the tunable constants", type = str)
    parser.add_argument('--verbose', action = 'store_true', default = False, help = "increase output verbosity")

    return parser


def get_parser():
    parser = argparse.ArgumentParser(prog = 'reuse-vr')

    subparsers = parser.add_subparsers(help = 'Available commands', dest = 'command')
    subparsers.required = True

    for command, description in (
            (Command.FSM, "accelerated proximal point on a finite sum"),
            (Command.DMDP, "proximal reward method on a discounted MDP"),
            (Command.AMDP, "average-reward MDP through a discounted reduction"),
            (Command.GAME22, "matrix game over two balls"),
            (Command.GAME21, "matrix game over a ball and a simplex"),
            (Command.TOPEV, "top eigenvector by shift-and-invert"),
            ):
        add_experiment_arguments(subparsers.add_parser(command.value, help = description))

    parser_sweep = add_experiment_arguments(subparsers.add_parser(Command.SWEEP.value, help = 'Sweep a knob grid over loop modes'))
    parser_sweep.add_argument('--target', action = 'store', help = "solver to sweep", choices = [item.value for item in Command if item.instantiation])

    parser_tvcheck = add_experiment_arguments(subparsers.add_parser(Command.TVCHECK.value, help = 'Pseudo-independence probe of a sub-solver'))
    parser_tvcheck.add_argument('--n-seeds', action = 'store', help = "seeds to probe", type = int)
    parser_tvcheck.add_argument('--n-inner', action = 'store', help = "draws per seed", type = int)

    parser_validate = subparsers.add_parser('validate', help = 'Check a problem file')
    parser_validate.add_argument('--problem', action = 'store', help = "problem file or directory", type = str, required = True)
    parser_validate.add_argument('--kind', action = 'store', help = "problem kind", choices = ['fsm', 'dmdp', 'game', 'topev'], required = True)
    parser_validate.add_argument('--verbose', action = 'store_true', default = False, help = "increase output verbosity")

    return parser


def build_config(args) -> ExperimentConfig:
    """The --config file, if any, with every given flag overriding it."""
    base = ExperimentConfig.load(args.config) if args.config else ExperimentConfig(command = args.command, target = getattr(args, 'target', None) or None)

    if base.command.value != args.command and args.config:
        base = base.replace(command = Command(args.command))

    return base.replace(
        problem = args.problem,
        modes = args.mode,
        knobs = args.knob_grid,
        eps = args.eps,
        delta = args.delta,
        c = args.c,
        trials = args.trials,
        master_seed = args.seed,
        out = args.out,
        t_mix = args.t_mix,
        exact_inner = args.exact_inner,
        workers = args.workers,
        timings = args.timings,
        target = getattr(args, 'target', None),
        n_seeds = getattr(args, 'n_seeds', None),
        n_inner = getattr(args, 'n_inner', None),
        )


def main():
    parser = get_parser()
    args = parser.parse_args()
    logging.basicConfig(level = logging.DEBUG if args.verbose else logging.WARNING, stream = sys.stdout)

    if args.command == 'validate':
        report = validate_problem(args.problem, args.kind)
        print(json.dumps(report.to_dict(), indent = 2))  # noqa: T001
        return 0 if report.valid else 1

    try:
        settings = load_settings(args.settings)
        cfg = build_config(args)

        if cfg.command is Command.TVCHECK:
            print(json.dumps(run_tvcheck(cfg, settings), indent = 2))  # noqa: T001
            return 0

        rows = run_experiment(cfg, settings)
    except (ProblemParsingError, ProblemValidationError, ParameterRangeError) as error:
        log.error(str(error))
        print(error, file = sys.stderr)  # noqa: T001
        return 2

    if cfg.out is None:
        writer = csv.DictWriter(sys.stdout, fieldnames = HEADER)
        writer.writeheader()

        for row in rows:
            writer.writerow(row.to_csv())

    return 0


if __name__ == '__main__':
    sys.exit(main())
