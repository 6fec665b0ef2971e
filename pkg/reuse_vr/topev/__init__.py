# Top eigenvector by shift-and-invert: inverse power iterations over APP linear solves.

from .power_method import power_method  # noqa: F401
from .shifted_sum_spec import ShiftedSumSpec, build_shifted_sum  # noqa: F401
from .top_ev_problem import TopEvProblem  # noqa: F401
from .shift_invert import TopEvResult, estimate_shift, estimate_top_eigenvalue, power_iterations, rayleigh_quotient, shift_invert_solve, svrg_topev_subsolve  # noqa: F401
