# Matrix games: conceptual proximal point over variance-reduced mirror descent sub-solvers.

from .domain import Domain  # noqa: F401
from .term_kind import TermKind  # noqa: F401
from .composite_term import CompositeTerm  # noqa: F401
from .composite_game import CompositeGame  # noqa: F401
from .game_setup import GameSetup, prox_step  # noqa: F401
from .gap import duality_gap  # noqa: F401
from .mapping import bregman, gradient_mapping, project  # noqa: F401
from .sample_dists import SampleDists, entry_seed_spec, row_column_seed_spec, sample_dists  # noqa: F401
from .vrmd import VrmdSchedule, run_vrmd, vrmd1_subsolve, vrmd2_subsolve, vrmd_schedule  # noqa: F401
from .reference import extragradient_reference  # noqa: F401
from .cpp import CppPlan, cpp_contract, cpp_plan, cpp_post_process, cpp_solve, default_alpha  # noqa: F401
from .problem_files import load_game, random_game, read_game  # noqa: F401
