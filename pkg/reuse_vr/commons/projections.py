import numpy


def project_simplex(values, total = 1.0):
    """
    Euclidean projection onto the scaled simplex {y >= 0, sum(y) = total}, by sorting and thresholding.

    >>> project_simplex(numpy.array([0.8, 0.6])).round(12).tolist()
    [0.6, 0.4]
    >>> project_simplex(numpy.array([0.2, 0.8])).tolist()
    [0.2, 0.8]
    """
    values = numpy.asarray(values, dtype = float)
    descending = numpy.sort(values)[::-1]
    cumulative = numpy.cumsum(descending) - total
    ranks = numpy.arange(1, len(values) + 1)
    support = numpy.count_nonzero(descending - cumulative / ranks > 0)
    threshold = cumulative[support - 1] / support
    return numpy.maximum(values - threshold, 0)


def project_ball(values, radius = 1.0):
    """
    Euclidean projection onto the ball of the given radius (radial clipping).

    >>> project_ball(numpy.array([3.0, 4.0])).round(12).tolist()
    [0.6, 0.8]
    """
    values = numpy.asarray(values, dtype = float)
    norm = numpy.linalg.norm(values)

    if norm <= radius:
        return values.copy()

    return values * (radius / norm)
