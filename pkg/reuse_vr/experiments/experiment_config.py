from __future__ import annotations

import dataclasses
import json
import os
import typing

import yaml

from reuse_vr.errors import ProblemParsingError, ProblemValidationError
from reuse_vr.framework import LoopType

from .. import experiments


@dataclasses.dataclass(frozen = True)
class ExperimentConfig:
    """
    One experiment: a command, its problem, the loop modes and knob values to sweep, and the trial budget.

    ``problem`` is a file or directory path, or ``builtin:<name>``; it defaults to the command's builtin.
    A ``sweep`` runs the solver named by ``target``.
    """

    command: experiments.Command
    problem: typing.Optional[str] = None
    modes: typing.Tuple[LoopType, ...] = (LoopType.REUSE,)
    knobs: typing.Tuple[float, ...] = ()
    eps: float = 0.1
    delta: float = 0.1
    c: float = 10.0
    trials: int = 1
    master_seed: int = 0
    out: typing.Optional[str] = None
    target: typing.Optional[experiments.Command] = None
    t_mix: float = 1.0
    exact_inner: bool = False
    workers: int = 1
    timings: bool = False
    n_seeds: int = 5
    n_inner: int = 200

    def __post_init__(self) -> None:
        object.__setattr__(self, 'command', experiments.Command(self.command))
        object.__setattr__(self, 'modes', tuple(LoopType.parse(mode) for mode in self.modes))
        object.__setattr__(self, 'knobs', tuple(float(knob) for knob in self.knobs))

        if self.target is not None:
            object.__setattr__(self, 'target', experiments.Command(self.target))

        violations = list(self._violations())

        if violations:
            raise ProblemValidationError(violations)

    def _violations(self) -> typing.Iterator[typing.Tuple[list, str]]:
        if self.command is experiments.Command.SWEEP and (self.target is None or not self.target.instantiation):
            yield ['config', 'target'], "a sweep needs a solver target (fsm, dmdp, amdp, game22, game21 or topev)"

        if not self.modes:
            yield ['config', 'modes'], "at least one loop mode is required"

        if not 0 < self.eps:
            yield ['config', 'eps'], f"eps must be positive, got {self.eps}"

        if not 0 < self.delta < 1:
            yield ['config', 'delta'], f"delta must lie in (0, 1), got {self.delta}"

        if not self.c > 1:
            yield ['config', 'c'], f"c must exceed 1, got {self.c}"

        if self.trials < 1 or self.workers < 1:
            yield ['config', 'trials'], "trials and workers must be positive"

        if not self.t_mix > 0:
            yield ['config', 't_mix'], f"t_mix must be positive, got {self.t_mix}"

    @property
    def solver(self) -> experiments.Command:
        """The instantiation this experiment runs."""
        return self.target if self.command is experiments.Command.SWEEP else self.command

    @property
    def sidecar(self) -> typing.Optional[str]:
        return None if self.out is None else os.path.splitext(self.out)[0] + '.json'

    def replace(self, **changes) -> ExperimentConfig:
        return dataclasses.replace(self, **{key: value for key, value in changes.items() if value is not None})

    def to_dict(self) -> dict:
        result = dataclasses.asdict(self)
        result['command'] = self.command.value
        result['modes'] = [mode.value for mode in self.modes]
        result['knobs'] = list(self.knobs)
        result['target'] = None if self.target is None else self.target.value
        return result

    @classmethod
    def from_dict(cls, data: typing.Mapping, source: str = '<experiment>') -> ExperimentConfig:
        known = {field.name for field in dataclasses.fields(cls)}
        violations = [([source, key], "unknown key") for key in data if key not in known]

        if 'command' not in data:
            violations.append(([source, 'command'], "missing"))

        if violations:
            raise ProblemValidationError(violations)

        try:
            return cls(**data)
        except (TypeError, ValueError) as error:
            if isinstance(error, ProblemValidationError):
                raise

            raise ProblemValidationError([([source], str(error))])

    @classmethod
    def load(cls, path: str) -> ExperimentConfig:
        """Read a JSON file (``.json``) or a YAML file."""
        try:
            with open(path) as file:
                data = json.load(file) if path.endswith('.json') else yaml.safe_load(file)
        except (OSError, ValueError, yaml.error.YAMLError) as error:
            raise ProblemParsingError(error, path, error.__traceback__)

        if not isinstance(data, dict):
            raise ProblemParsingError("expected a mapping at the top level", path)

        return cls.from_dict(data, path)
