# Experiment harness: configurations, problem ingestion and validation, knob x mode sweeps and their tables.

from .command import Command  # noqa: F401
from .experiment_config import ExperimentConfig  # noqa: F401
from .sweep_row import HEADER, SweepRow  # noqa: F401
from .trial_outcome import TrialOutcome  # noqa: F401
from .validation_report import ValidationReport  # noqa: F401
from .problems import BUILTIN, builtin_problem, load_fsm, load_game_problem, load_problem, validate_problem  # noqa: F401
from .instantiation import Instantiation  # noqa: F401
from .cells import cell_runner, instantiation, trial_seed  # noqa: F401
from .run_experiment import run_cells, run_experiment, run_tvcheck, write_rows, write_sidecar  # noqa: F401
