from __future__ import annotations

import json
import typing

import numpy

from reuse_vr.errors import ProblemParsingError, ProblemValidationError

from .. import games


def read_game(matrix, config: dict, source: str = '<game>') -> typing.Tuple[games.CompositeGame, games.GameSetup, dict]:
    """A game and its setup from a matrix and the config {domain, phi, psi, alpha, eps}."""
    violations = []
    domain = config.get('domain', 'ball_ball')

    if domain not in {item.value for item in games.Domain}:
        violations.append(([source, 'domain'], f"unknown domain '{domain}'"))

    matrix = numpy.asarray(matrix, dtype = float)

    if matrix.ndim != 2 or not numpy.isfinite(matrix).all():
        violations.append(([source, 'matrix'], "expected a finite 2-d matrix"))

    for key in ('alpha', 'eps'):
        if key in config and not float(config[key]) > 0:
            violations.append(([source, key], f"{key} must be positive"))

    if violations:
        raise ProblemValidationError(violations)

    try:
        game = games.CompositeGame(matrix, phi = config.get('phi'), psi = config.get('psi'))
        setup = games.GameSetup.for_game(game, domain)
    except ValueError as error:
        raise ProblemValidationError([([source, 'terms'], str(error))])

    return game, setup, config


def load_game(matrix_path: str, config_path: typing.Optional[str] = None) -> typing.Tuple[games.CompositeGame, games.GameSetup, dict]:
    try:
        matrix = numpy.loadtxt(matrix_path, delimiter = ',', ndmin = 2)
    except (OSError, ValueError) as error:
        raise ProblemParsingError(error, matrix_path, error.__traceback__)

    config: dict = {}

    if config_path is not None:
        try:
            with open(config_path) as file:
                config = json.load(file)
        except (OSError, json.JSONDecodeError) as error:
            raise ProblemParsingError(error, config_path, error.__traceback__)

    return read_game(matrix, config, config_path or matrix_path)


def random_game(m: int, n: int, rng: numpy.random.Generator, scale: float = 1.0) -> games.CompositeGame:
    """Gaussian payoffs with entries of standard deviation ``scale``."""
    return games.CompositeGame(scale * rng.standard_normal((m, n)))
