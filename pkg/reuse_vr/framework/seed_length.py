import math


def seed_length(base: float, n_outer: int, delta: float, settings = None) -> int:
    """
    Default seed length ceil(C * base * log(base * n_outer / delta)), C being ``framework.log_constant``.

    >>> seed_length(base = 10, n_outer = 1, delta = 0.1)
    185
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    constant = settings.framework.log_constant
    return max(1, math.ceil(constant * base * math.log(max(base * n_outer / delta, math.e))))
