from __future__ import annotations

import json
import logging
import os
import typing

import numpy

from reuse_vr.errors import ProblemParsingError, ProblemValidationError
from reuse_vr.randomness import RandomStreams

from .. import experiments, fsm, games, mdp

log = logging.getLogger(__name__)

BUILTIN = 'builtin:'

KINDS = {
    experiments.Command.FSM: 'fsm',
    experiments.Command.DMDP: 'dmdp',
    experiments.Command.AMDP: 'dmdp',
    experiments.Command.GAME22: 'game',
    experiments.Command.GAME21: 'game',
    experiments.Command.TOPEV: 'topev',
    experiments.Command.TVCHECK: 'fsm',
    }

DEFAULT_BUILTINS = {'fsm': 'ridge', 'dmdp': 'mdp', 'game': 'game', 'topev': 'topev'}


def builtin_problem(name: str):
    """Seeded synthetic instances, identical on every call."""
    rng = RandomStreams(0).generator(BUILTIN + name)

    if name == 'ridge':
        return fsm.FsmProblem.random_ridge(20, 3, rng, l2 = 0.1)

    if name == 'scalar':
        return fsm.FsmProblem(features = [[1.0], [2.0], [1.0]], labels = [1.0, 1.0, 0.0])

    if name == 'mdp':
        return mdp.random_dmdp(4, 2, rng, gamma = 0.9)

    if name == 'chain':
        return mdp.deterministic_chain(3, gamma = 0.9)

    if name == 'game':
        return games.random_game(4, 3, rng).matrix

    if name == 'topev':
        return rng.standard_normal((12, 3)) * numpy.array([3.0, 1.0, 0.5])

    raise ProblemParsingError(f"unknown builtin problem '{name}'", BUILTIN + name)


def _read_json(path: str) -> dict:
    try:
        with open(path) as file:
            return json.load(file)
    except (OSError, json.JSONDecodeError) as error:
        raise ProblemParsingError(error, path, error.__traceback__)


def _read_matrix(path: str) -> numpy.ndarray:
    try:
        matrix = numpy.loadtxt(path, delimiter = ',', ndmin = 2)
    except (OSError, ValueError) as error:
        raise ProblemParsingError(error, path, error.__traceback__)

    if not numpy.isfinite(matrix).all():
        rows = sorted(set(numpy.argwhere(~numpy.isfinite(matrix))[:, 0].tolist()))
        raise ProblemValidationError([([os.path.basename(path), 'rows'], f"non-finite entries in rows {rows}")])

    return matrix


def _sidecar(path: str) -> typing.Optional[str]:
    candidate = os.path.splitext(path)[0] + '.json'
    return candidate if candidate != path and os.path.exists(candidate) else None


def load_fsm(location: str) -> fsm.FsmProblem:
    """
    A directory with ``matrix.csv``, ``labels.csv`` and an optional ``metadata.json``, or one CSV
    whose last column holds the labels (metadata from a JSON file of the same stem).
    """
    if os.path.isdir(location):
        metadata = os.path.join(location, 'metadata.json')
        problem, _ = fsm.load_fsm_problem(
            os.path.join(location, 'matrix.csv'),
            os.path.join(location, 'labels.csv'),
            metadata if os.path.exists(metadata) else None,
            )
        return problem

    table = _read_matrix(location)

    if table.shape[1] < 2:
        raise ProblemValidationError([([os.path.basename(location), 'columns'], "expected features followed by a label column")])

    sidecar = _sidecar(location)
    metadata = _read_json(sidecar) if sidecar else {}

    try:
        return fsm.FsmProblem(
            features = table[:, :-1],
            labels = table[:, -1],
            link = metadata.get('link', 'squared'),
            l2 = float(metadata.get('l2', 0.0)),
            mu = metadata.get('mu_hint'),
            )
    except ValueError as error:
        raise ProblemValidationError([([os.path.basename(location)], str(error))])


def load_game_problem(location: str, domain: games.Domain) -> typing.Tuple[games.CompositeGame, games.GameSetup]:
    """A CSV payoff matrix, with terms from a JSON file of the same stem; the domain comes from the command."""
    if location.startswith(BUILTIN):
        matrix, config = builtin_problem(location[len(BUILTIN):]), {}
    else:
        sidecar = _sidecar(location)
        matrix, config = _read_matrix(location), (_read_json(sidecar) if sidecar else {})

    game, setup, _ = games.read_game(matrix, {**config, 'domain': domain.value}, location)
    return game, setup


def load_problem(command: experiments.Command, location: typing.Optional[str] = None):
    """The problem of ``command``: an FsmProblem, a Dmdp, a (game, setup) pair or a matrix."""
    kind = KINDS[command]
    location = location or BUILTIN + DEFAULT_BUILTINS[kind]

    if kind == 'game':
        domain = games.Domain.BALL_BALL if command is experiments.Command.GAME22 else games.Domain.BALL_SIMPLEX
        return load_game_problem(location, domain)

    if location.startswith(BUILTIN):
        return builtin_problem(location[len(BUILTIN):])

    if kind == 'fsm':
        return load_fsm(location)

    if kind == 'dmdp':
        return mdp.load_dmdp(location)

    return _read_matrix(location)


def _summary(kind: str, problem) -> dict:
    if kind == 'fsm':
        return {'n': problem.n, 'd': problem.dim, 'mu': problem.mu}

    if kind == 'dmdp':
        return {'states': problem.n_states, 'pairs': problem.n_pairs, 'nnz': problem.nnz, 'gamma': problem.gamma}

    if kind == 'game':
        game, setup = problem
        return {'m': game.m, 'n': game.n, 'domain': setup.domain.value}

    return {'n': problem.shape[0], 'd': problem.shape[1]}


def validate_problem(path: str, kind: str) -> experiments.ValidationReport:
    """
    Check a problem file of ``kind`` (fsm, dmdp, game or topev) without running anything.

    Every violation found by the loaders is itemized under its location.
    """
    commands = {'fsm': experiments.Command.FSM, 'dmdp': experiments.Command.DMDP, 'game': experiments.Command.GAME22, 'topev': experiments.Command.TOPEV}

    if kind not in commands:
        return experiments.ValidationReport(path = path, kind = kind, errors = {'kind': f"unknown kind; expected one of {sorted(commands)}"})

    try:
        problem = load_problem(commands[kind], path)
    except ProblemValidationError as error:
        return experiments.ValidationReport(path = path, kind = kind, errors = error.errors)
    except ProblemParsingError as error:
        return experiments.ValidationReport(path = path, kind = kind, errors = {'file': str(error)})

    report = experiments.ValidationReport(path = path, kind = kind, summary = _summary(kind, problem))
    log.info("%s is a valid %s problem: %s", path, kind, report.summary)
    return report
