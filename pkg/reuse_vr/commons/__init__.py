# Numerical helpers shared by the instantiations.

from .alias_sampler import AliasSampler  # noqa: F401
from .projections import project_ball, project_simplex  # noqa: F401
from .vectors import as_vector, ceil_log, check_finite  # noqa: F401
