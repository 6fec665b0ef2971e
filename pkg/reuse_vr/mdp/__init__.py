# Discounted and average-reward MDPs: Bellman machinery, variance-reduced value iteration
# and the proximal reward method.

from .policy import Policy  # noqa: F401
from .dmdp import Dmdp  # noqa: F401
from .bellman import bellman_apply, greedy, q_values  # noqa: F401
from .reference import average_reward, exact_solve, policy_value, sub_reward  # noqa: F401
from .vrvi import VrviResult, VrviSchedule, run_vrvi, vrvi_policy_subsolve, vrvi_schedule, vrvi_seed_spec, vrvi_subsolve  # noqa: F401
from .prm import PrmPlan, prm_contract, prm_plan, prm_post_process, prm_solve  # noqa: F401
from .runtime_profile import RuntimeProfile, runtime_profile, sparsity_discount  # noqa: F401
from .amdp import amdp_discount, amdp_solve  # noqa: F401
from .stability import StabilityRecord, reward_stability_check  # noqa: F401
from .problem_files import dump_dmdp, load_dmdp, read_dmdp  # noqa: F401
from .instances import deterministic_chain, random_dmdp  # noqa: F401
