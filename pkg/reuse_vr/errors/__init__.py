# Errors are grouped here so that callers can catch them without importing
# the numerical modules that raise them:
#
#   >>> from reuse_vr import errors
#   >>> issubclass(errors.SeedTooShortError, ValueError)
#   True

from .binning_error import BinningError  # noqa: F401
from .box_violation_error import BoxViolationError  # noqa: F401
from .convergence_error import ConvergenceError  # noqa: F401
from .degenerate_noise_error import DegenerateNoiseError  # noqa: F401
from .dimension_mismatch_error import DimensionMismatchError  # noqa: F401
from .loop_configuration_error import LoopConfigurationError  # noqa: F401
from .missing_oracle_error import MissingOracleError  # noqa: F401
from .non_finite_error import NonFiniteError  # noqa: F401
from .parameter_range_error import ParameterRangeError  # noqa: F401
from .precondition_error import PreconditionError  # noqa: F401
from .problem_parsing_error import ProblemParsingError  # noqa: F401
from .problem_validation_error import ProblemValidationError  # noqa: F401
from .sample_key_error import SampleKeyError  # noqa: F401
from .seed_too_short_error import SeedTooShortError  # noqa: F401
from .size_cap_error import SizeCapError  # noqa: F401
