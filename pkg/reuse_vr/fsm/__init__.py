# Finite-sum minimization: accelerated proximal point over SVRG sub-solves.

from .link import Link  # noqa: F401
from .glm_component import GlmComponent  # noqa: F401
from .fsm_problem import FsmProblem  # noqa: F401
from .app_state import AppState  # noqa: F401
from .post_process import fsm_post_process, packed_post_process  # noqa: F401
from .seed_specs import index_seed_spec, nonuniform_seed_spec, uniform_seed_spec  # noqa: F401
from .svrg import SvrgSchedule, run_svrg, svrg_schedule  # noqa: F401
from .reference import exact_minimizer, newton_minimize, reference_subsolve, regularized_gap  # noqa: F401
from .subsolvers import high_precision_accuracy, svrg_hp_subsolve, svrg_subsolve  # noqa: F401
from .app_plan import AppPlan, app_plan  # noqa: F401
from .app import app_contract, app_solution, app_solve  # noqa: F401
from .problem_files import load_fsm_problem  # noqa: F401
