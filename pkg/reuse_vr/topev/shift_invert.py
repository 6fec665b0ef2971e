from __future__ import annotations

import dataclasses
import logging
import math
import typing
import warnings

import numpy

from reuse_vr.errors import ConvergenceError
from reuse_vr.framework import LoopType, RunRecord
from reuse_vr.oracles import ComponentOracle, LedgerSnapshot
from reuse_vr.randomness import RandomStreams
from reuse_vr.warnings import ShiftWarning

from .. import fsm, topev

log = logging.getLogger(__name__)

START = 'start'
ESTIMATE = 'estimate'


def rayleigh_quotient(matrix, x) -> float:
    """
    x^T A^T A x / x^T x.

    >>> rayleigh_quotient([[2.0, 0.0], [0.0, 1.0]], [1.0, 0.0])
    4.0
    """
    x = numpy.asarray(x, dtype = float)
    ax = numpy.asarray(matrix, dtype = float) @ x
    return float(ax @ ax) / float(x @ x)


def estimate_shift(matrix, gap_hint: float, rng: numpy.random.Generator, settings = None) -> typing.Tuple[float, float]:
    """
    Power-method estimate of lambda_1 and the shift lambda' = estimate (1 + margin) + gap_hint / 2.

    Returns (lambda', estimate). Without a positive ``gap_hint`` the shift only carries the relative
    margin, which a :class:`ShiftWarning` reports.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    topev_settings = settings.topev
    matrix = numpy.asarray(matrix, dtype = float)
    start = rng.standard_normal(matrix.shape[1])
    estimate, _ = topev.power_method(lambda x: matrix.T @ (matrix @ x), start, topev_settings.power_estimate_iterations)

    if not gap_hint > 0:
        warnings.warn(f"No positive gap hint; the shift {estimate:.6g} (1 + margin) may not exceed lambda_1.", ShiftWarning)

    lambda_prime = estimate * (1 + topev_settings.relative_margin) + max(gap_hint, 0.0) / 2
    return lambda_prime, estimate


def svrg_topev_subsolve(spec, bundle, u, seed, lam, c, delta, probabilities = None, settings = None):
    """
    The high-precision SVRG sub-solve on the shifted sum, sampling rows with P(i) = |a_i|^2 / |A|_F^2.

    Valid with nonconvex components because the average is strongly convex.
    """
    probabilities = spec.probabilities if probabilities is None else probabilities
    return fsm.svrg_hp_subsolve(spec, bundle, u, seed, lam, c, delta, probabilities, settings)


@dataclasses.dataclass
class TopEvResult:
    vector: numpy.ndarray
    rayleigh: float
    iterations: int
    records: typing.List[RunRecord]
    converged: bool
    top_estimate: float = 0.0
    estimate_ledger: LedgerSnapshot = dataclasses.field(default_factory = LedgerSnapshot)

    @property
    def ledger(self) -> LedgerSnapshot:
        return sum((record.ledger for record in self.records), self.estimate_ledger)

    def to_dict(self, eps: typing.Optional[float] = None) -> dict:
        return {
            'rayleigh': self.rayleigh,
            'eps': eps,
            'iterations': self.iterations,
            'converged': self.converged,
            'top_estimate': self.top_estimate,
            'vector': self.vector.tolist(),
            'ledger': self.ledger.to_dict(),
            'estimate': self.estimate_ledger.to_dict(),
            'solves': [record.ledger.to_dict() for record in self.records],
            }


def power_iterations(problem: topev.TopEvProblem, settings = None) -> int:
    """ceil(C log(d / eps)), at least 1."""
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    return max(1, math.ceil(settings.topev.power_constant * math.log(problem.dim / problem.eps)))


def estimate_top_eigenvalue(problem: topev.TopEvProblem, rng: numpy.random.Generator, settings = None) -> typing.Tuple[float, LedgerSnapshot]:
    """
    Power-method estimate of lambda_1 through batch queries of the shifted sum with b = 0, whose
    gradient is (lambda' I - A^T A) x.

    Returns the estimate and the ledger of its ``power_estimate_iterations + 1`` batch queries.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    # Batch queries never read mu.
    spec = topev.build_shifted_sum(problem.matrix, problem.lambda_prime, numpy.zeros(problem.dim), top_estimate = 0.0)
    bundle = ComponentOracle(spec)

    def gram(x):
        return problem.lambda_prime * x - bundle.batch_query(x)

    estimate, _ = topev.power_method(gram, rng.standard_normal(problem.dim), settings.topev.power_estimate_iterations)
    return estimate, bundle.snapshot()


def shift_invert_solve(
        problem: topev.TopEvProblem,
        mode = LoopType.REUSE,
        delta: float = 0.1,
        master_seed: int = 0,
        strict: bool = True,
        settings = None,
        tracer = None,
        ) -> TopEvResult:
    """
    Inverse power iterations x <- (lambda' I - A^T A)^-1 x / |.|, each system solved by an APP run
    over the shifted sum.

    lambda_1 is only known through :func:`estimate_top_eigenvalue`, whose queries the result's ledger
    includes. The shift is assumed above lambda_1; :class:`ParameterRangeError` is raised only when the
    estimate proves it is not.

    With ``strict``, a final Rayleigh quotient below (1 - eps) times the estimate raises
    :class:`ConvergenceError`.
    """
    from reuse_vr.settings import default_settings

    settings = settings or default_settings()
    streams = RandomStreams(master_seed)
    top_estimate, estimate_ledger = estimate_top_eigenvalue(problem, streams.generator(ESTIMATE), settings)
    x = streams.generator(START).standard_normal(problem.dim)
    x /= numpy.linalg.norm(x)
    spec = topev.build_shifted_sum(problem.matrix, problem.lambda_prime, x, top_estimate = top_estimate)
    lam = max(spec.mu, problem.alpha * top_estimate)
    accuracy = settings.topev.solve_accuracy * spec.lipschitz / spec.mu
    iterations = power_iterations(problem, settings)
    records = []
    log.info("shift-and-invert: lambda_1 estimate %.6g, mu %.3g, lambda %.3g, %d iterations", top_estimate, spec.mu, lam, iterations)

    for iteration in range(iterations):
        spec = spec.with_rhs(x)
        record = fsm.app_solve(
            spec,
            numpy.zeros(problem.dim),
            accuracy,
            lam,
            delta,
            mode = mode,
            master_seed = int(streams.sequence('solve', iteration).generate_state(1, numpy.uint64)[0]),
            probabilities = spec.probabilities,
            subsolver = svrg_topev_subsolve,
            bundle = ComponentOracle(spec),
            settings = settings,
            tracer = tracer,
            )
        records.append(record)
        solution = fsm.app_solution(record)
        norm = float(numpy.linalg.norm(solution))

        if norm == 0:
            raise ConvergenceError('shift-and-invert', iteration + 1, 0.0, problem.eps)

        x = solution / norm
        log.debug("power iteration %d/%d: rayleigh %.6g", iteration + 1, iterations, rayleigh_quotient(problem.matrix, x))

    rayleigh = rayleigh_quotient(problem.matrix, x)
    converged = rayleigh >= (1 - problem.eps) * top_estimate

    if strict and not converged:
        raise ConvergenceError('shift-and-invert', iterations, 1 - rayleigh / top_estimate, problem.eps)

    return TopEvResult(
        vector = x,
        rayleigh = rayleigh,
        iterations = iterations,
        records = records,
        converged = converged,
        top_estimate = top_estimate,
        estimate_ledger = estimate_ledger,
        )
