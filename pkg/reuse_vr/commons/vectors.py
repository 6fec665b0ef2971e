import math

import numpy

from reuse_vr.errors import DimensionMismatchError, NonFiniteError


def as_vector(value, name: str, size = None) -> numpy.ndarray:
    vector = numpy.asarray(value, dtype = float)

    if vector.ndim == 0:
        vector = vector.reshape(1)

    if vector.ndim != 1 or (size is not None and vector.shape[0] != size):
        raise DimensionMismatchError(name, (size,), vector.shape)

    return vector


def check_finite(value, name: str) -> numpy.ndarray:
    value = numpy.asarray(value, dtype = float)

    if not numpy.isfinite(value).all():
        raise NonFiniteError(name, value)

    return value


def ceil_log(value: float) -> int:
    """
    Smallest integer at least log(value), and at least 1.

    >>> ceil_log(1.0)
    1
    >>> ceil_log(math.e ** 2)
    2
    """
    return max(1, math.ceil(math.log(max(value, 1.0)) - 1e-12))
