from __future__ import annotations

import typing

import numpy

from reuse_vr.errors import SeedTooShortError

from .. import fsm


def svrg_subsolve(
        problem,
        bundle,
        u: fsm.AppState,
        seed,
        lam: float,
        c: float,
        delta: float,
        probabilities: typing.Optional[numpy.ndarray] = None,
        settings = None,
        ) -> numpy.ndarray:
    """
    Solve the (u, lam, c)-sub-problem: relative error at most 1/c on F + lam/2 |x - y_u|^2.

    ``problem`` only provides constants (n, smoothness, mu); data flows through ``bundle``
    and components are only fetched for indices of ``seed``.
    """
    probabilities = numpy.full(problem.n, 1.0 / problem.n) if probabilities is None else probabilities
    schedule = fsm.svrg_schedule(problem, lam, c, delta, probabilities, settings)

    if len(seed) < schedule.length:
        raise SeedTooShortError('svrg', schedule.length, len(seed))

    return fsm.run_svrg(bundle, u.y, lam, seed.records, probabilities, schedule)


def high_precision_accuracy(c: float, mu: float, lam: float) -> float:
    """
    Relative accuracy that yields |x' - f_sub|_inf^2 <= gap / c through strong convexity of modulus mu + lam.

    From |x - x*|^2 <= 2 (G(x) - min G) / (mu + lam): 2c / (mu + lam), floored at c itself.

    >>> high_precision_accuracy(100.0, 0.5, 0.5)
    200.0
    """
    return max(c, 2 * c / (mu + lam))


def svrg_hp_subsolve(
        problem,
        bundle,
        u: fsm.AppState,
        seed,
        lam: float,
        c: float,
        delta: float,
        probabilities: typing.Optional[numpy.ndarray] = None,
        settings = None,
        ) -> numpy.ndarray:
    """``svrg_subsolve`` at the accuracy giving |x' - f_sub(y_u)|_inf^2 <= (1/c) (G(y_u) - min G)."""
    accuracy = high_precision_accuracy(c, problem.mu, lam)
    return svrg_subsolve(problem, bundle, u, seed, lam, accuracy, delta, probabilities, settings)
