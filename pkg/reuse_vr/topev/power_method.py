import typing

import numpy


def power_method(apply: typing.Callable, x, iterations: int) -> typing.Tuple[float, numpy.ndarray]:
    """
    Rayleigh quotient and unit direction after ``iterations`` steps x <- M x / |M x| of a PSD operator M.

    The quotient is never above the top eigenvalue of M. ``apply`` is called ``iterations + 1`` times,
    or fewer when M x vanishes.

    >>> quotient, x = power_method(lambda x: numpy.array([4.0, 1.0]) * x, [1.0, 1.0], 50)
    >>> quotient, abs(x[0])
    (4.0, 1.0)
    """
    x = numpy.array(x, dtype = float)
    norm = float(numpy.linalg.norm(x))

    if norm == 0:
        return 0.0, x

    x /= norm

    for _ in range(iterations):
        y = apply(x)
        norm = float(numpy.linalg.norm(y))

        if norm == 0:
            return 0.0, x

        x = y / norm

    return float(x @ apply(x)), x
