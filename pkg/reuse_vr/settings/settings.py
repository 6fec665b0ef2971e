from __future__ import annotations

import dataclasses
import functools
import importlib.resources
import os
import typing
import warnings

import yaml

from reuse_vr.errors import ProblemParsingError, ProblemValidationError
from reuse_vr.warnings import LibYAMLWarning

try:
    from yaml import CLoader as Loader
except ImportError:
    message = [
        "libyaml is not installed in your environment.",
        "This can make settings and experiment files slower to load.",
        "Once you have installed libyaml, run 'pip uninstall pyyaml && pip install pyyaml --no-cache-dir'",
        "so that it is used in your Python environment." + os.linesep
        ]
    warnings.warn(" ".join(message), LibYAMLWarning)
    from yaml import Loader  # type: ignore


class SettingsLoader(Loader):  # type: ignore
    pass


def dict_no_duplicate_constructor(loader, node, deep = False):
    keys = [key.value for key, value in node.value]

    if len(keys) != len(set(keys)):
        duplicate = next((key for key in keys if keys.count(key) > 1))
        raise yaml.parser.ParserError('', node.start_mark, f"Found duplicate key '{duplicate}'")

    return loader.construct_mapping(node, deep)


yaml.add_constructor(yaml.resolver.BaseResolver.DEFAULT_MAPPING_TAG, dict_no_duplicate_constructor, Loader = SettingsLoader)


@dataclasses.dataclass(frozen = True)
class FrameworkSettings:
    log_constant: float = 4.0
    reuse_failure_factor: float = 5.0


@dataclasses.dataclass(frozen = True)
class FsmSettings:
    outer_constant: float = 2.0
    robust_safety: float = 4.0
    gap_safety: float = 4.0
    svrg_step_factor: float = 8.0
    svrg_epoch_factor: float = 16.0
    svrg_epoch_multiplier: float = 1.0
    newton_tolerance: float = 1e-12
    newton_max_iterations: int = 100


@dataclasses.dataclass(frozen = True)
class MdpSettings:
    outer_constant: float = 1.0
    vrvi_sample_constant: float = 32.0
    vrvi_epoch_slack: int = 2
    exact_size_cap: int = 10000
    exact_residual_tolerance: float = 1e-10
    exact_max_iterations: int = 1000


@dataclasses.dataclass(frozen = True)
class GamesSettings:
    outer_constant: float = 2.0
    accuracy_safety: float = 4.0
    vrmd_step_constant: float = 16.0
    vrmd_epoch_constant: float = 64.0
    simplex_floor: float = 1e-12
    reference_tolerance: float = 1e-10
    reference_max_iterations: int = 200000


@dataclasses.dataclass(frozen = True)
class TopEvSettings:
    power_constant: float = 1.0
    solve_accuracy: float = 100.0
    power_estimate_iterations: int = 200
    relative_margin: float = 0.01


@dataclasses.dataclass(frozen = True)
class DiagnosticsSettings:
    bins: int = 100
    bootstrap_replicates: int = 200
    tv_confidence: float = 0.99
    success_confidence: float = 0.95


SECTIONS = {
    'framework': FrameworkSettings,
    'fsm': FsmSettings,
    'mdp': MdpSettings,
    'games': GamesSettings,
    'topev': TopEvSettings,
    'diagnostics': DiagnosticsSettings,
    }


@dataclasses.dataclass(frozen = True)
class Settings:
    """
    Tunable constants of every instantiation.

    Settings are immutable; use :meth:`replace` to derive a variant:

        >>> settings = Settings().replace('fsm', outer_constant = 3.0)
        >>> settings.fsm.outer_constant
        3.0
    """

    framework: FrameworkSettings = dataclasses.field(default_factory = FrameworkSettings)
    fsm: FsmSettings = dataclasses.field(default_factory = FsmSettings)
    mdp: MdpSettings = dataclasses.field(default_factory = MdpSettings)
    games: GamesSettings = dataclasses.field(default_factory = GamesSettings)
    topev: TopEvSettings = dataclasses.field(default_factory = TopEvSettings)
    diagnostics: DiagnosticsSettings = dataclasses.field(default_factory = DiagnosticsSettings)

    def replace(self, section: str, **changes) -> Settings:
        current = getattr(self, section)
        return dataclasses.replace(self, **{section: dataclasses.replace(current, **changes)})

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: typing.Mapping, source: str = '<settings>') -> Settings:
        violations = []
        sections = {}

        for section, values in (data or {}).items():
            if section not in SECTIONS:
                violations.append(([source, section], f"unknown section; expected one of {sorted(SECTIONS)}"))
                continue

            known = {field.name: field for field in dataclasses.fields(SECTIONS[section])}

            for key in (values or {}):
                if key not in known:
                    violations.append(([source, section, key], "unknown setting"))

            sections[section] = {key: value for key, value in (values or {}).items() if key in known}

        if violations:
            raise ProblemValidationError(violations)

        return cls(**{
            section: SECTIONS[section](**values)
            for section, values
            in sections.items()
            })


def _read_yaml(text: str, source: str) -> dict:
    try:
        return yaml.load(text, Loader = SettingsLoader) or {}
    except yaml.error.YAMLError as error:
        raise ProblemParsingError(str(error), source)


def _merge(base: dict, override: typing.Mapping) -> dict:
    merged = {section: dict(values or {}) for section, values in base.items()}

    for section, values in (override or {}).items():
        merged.setdefault(section, {}).update(values or {})

    return merged


@functools.lru_cache(maxsize = None)
def default_settings() -> Settings:
    text = importlib.resources.read_text('reuse_vr.settings', 'defaults.yaml')
    return Settings.from_dict(_read_yaml(text, 'defaults.yaml'), 'defaults.yaml')


def load_settings(path: typing.Optional[str] = None) -> Settings:
    """Load the packaged defaults, overridden by the YAML file at ``path`` when given."""

    if path is None:
        return default_settings()

    with open(path) as file:
        override = _read_yaml(file.read(), path)

    base = default_settings().to_dict()
    return Settings.from_dict(_merge(base, override), path)
