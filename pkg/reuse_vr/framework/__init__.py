# The outer-solver/sub-solver meta-algorithm and the objects it is configured with.

from .loop_type import LoopType  # noqa: F401
from .noise_mode import NoiseMode  # noqa: F401
from .noise_config import NoiseConfig  # noqa: F401
from .outer_config import OuterConfig  # noqa: F401
from .oblivious_seed import ObliviousSeed  # noqa: F401
from .seed_spec import SeedSpec  # noqa: F401
from .sub_solver_contract import SubSolverContract  # noqa: F401
from .outer_problem import OuterProblem  # noqa: F401
from .run_record import RunRecord  # noqa: F401
from .reuse_parameters import ReuseParameters, reuse_parameters  # noqa: F401
from .seed_length import seed_length  # noqa: F401
from .weights import last_iterate_weights, uniform_weights  # noqa: F401
from .noise import add_noise, noisy  # noqa: F401
from .outer_loop import run_outer  # noqa: F401
from .composition import simulate_composition  # noqa: F401
