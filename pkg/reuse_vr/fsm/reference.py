from __future__ import annotations

import typing

import numpy
import scipy.linalg

from reuse_vr.errors import ConvergenceError


def newton_minimize(
        value: typing.Callable,
        gradient: typing.Callable,
        hessian: typing.Callable,
        start: numpy.ndarray,
        tolerance: float,
        max_iterations: int,
        ) -> numpy.ndarray:
    """Damped Newton with backtracking, stopping on a gradient norm below ``tolerance``."""
    x = numpy.array(start, dtype = float)

    for _ in range(max_iterations):
        g = gradient(x)
        residual = float(numpy.linalg.norm(g))

        if residual <= tolerance:
            return x

        direction = scipy.linalg.solve(hessian(x), g, assume_a = 'pos')
        step = 1.0
        current = value(x)

        def rejected(step):
            candidate = x - step * direction
            armijo = value(candidate) <= current - 0.25 * step * float(g @ direction)
            # Near the optimum, value differences drown in rounding; the gradient still decreases.
            return not armijo and float(numpy.linalg.norm(gradient(candidate))) >= residual

        while step > 1e-10 and rejected(step):
            step /= 2

        x = x - step * direction

    residual = float(numpy.linalg.norm(gradient(x)))

    if residual <= tolerance:
        return x

    raise ConvergenceError('newton', max_iterations, residual, tolerance)


def reference_subsolve(problem, y, lam: float, settings = None) -> numpy.ndarray:
    """
    Exact minimizer of F(x) + lam/2 |x - y|^2, the reference f_sub(y).

    One Newton step suffices for the squared link.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    y = numpy.asarray(y, dtype = float)
    identity = numpy.eye(problem.dim)
    tolerance = settings.fsm.newton_tolerance * (1 + float(numpy.linalg.norm(problem.gradient(y))))

    return newton_minimize(
        value = lambda x: problem.value(x) + 0.5 * lam * float((x - y) @ (x - y)),
        gradient = lambda x: problem.gradient(x) + lam * (x - y),
        hessian = lambda x: problem.hessian(x) + lam * identity,
        start = y,
        tolerance = tolerance,
        max_iterations = settings.fsm.newton_max_iterations,
        )


def exact_minimizer(problem, settings = None) -> numpy.ndarray:
    return reference_subsolve(problem, numpy.zeros(problem.dim), 0.0, settings)


def regularized_gap(problem, y, lam: float, x, minimizer = None) -> float:
    """G(x) - min G for G = F + lam/2 |. - y|^2."""
    y = numpy.asarray(y, dtype = float)
    minimizer = reference_subsolve(problem, y, lam) if minimizer is None else minimizer

    def objective(point):
        return problem.value(point) + 0.5 * lam * float((point - y) @ (point - y))

    return max(objective(numpy.asarray(x, dtype = float)) - objective(minimizer), 0.0)
