# Monte Carlo checks of the distributional claims: binned TV distances, pseudo-independence and
# composition probes, and success rates with exact binomial bounds.

from .binning import MAX_DIMENSIONS, Binning, as_samples  # noqa: F401
from .tv_estimate import TvEstimate  # noqa: F401
from .tv import plug_in_tv, tv_estimate, tv_from_samples  # noqa: F401
from .probe_report import ProbeReport  # noqa: F401
from .composition_report import CompositionReport  # noqa: F401
from .probes import composition_probe, pseudoindependence_probe  # noqa: F401
from .trial_report import TrialReport  # noqa: F401
from .success import clopper_pearson_lower, success_harness  # noqa: F401
from .sticky_coin import enumerate_sticky_coin_tv, sticky_coin_contract, sticky_coin_post  # noqa: F401
