import numpy


def uniform_weights(n_outer: int) -> numpy.ndarray:
    """
    >>> uniform_weights(4).tolist()
    [0.25, 0.25, 0.25, 0.25]
    """
    return numpy.full(n_outer, 1.0 / n_outer)


def last_iterate_weights(n_outer: int) -> numpy.ndarray:
    """
    >>> last_iterate_weights(3).tolist()
    [0.0, 0.0, 1.0]
    """
    weights = numpy.zeros(n_outer)
    weights[-1] = 1.0
    return weights
