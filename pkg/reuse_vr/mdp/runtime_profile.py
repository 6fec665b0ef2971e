from __future__ import annotations

import dataclasses
import math
import warnings

from reuse_vr.framework import LoopType
from reuse_vr.warnings import DiscountClipWarning

from .. import mdp

MAX_ONE_MINUS = 1 - 1e-6


@dataclasses.dataclass(frozen = True)
class RuntimeProfile:
    gamma_prime: float
    one_minus_gamma_prime: float
    clipped: bool
    n_outer: int
    batch_queries: int
    sample_queries: int
    plan: mdp.PrmPlan

    def to_dict(self) -> dict:
        return {
            'gamma_prime': self.gamma_prime,
            'one_minus_gamma_prime': self.one_minus_gamma_prime,
            'clipped': self.clipped,
            'n_outer': self.n_outer,
            'batch_queries': self.batch_queries,
            'sample_queries': self.sample_queries,
            }


def sparsity_discount(m: mdp.Dmdp) -> float:
    """
    1 - gamma' = max(sqrt(A_tot / nnz P), 1 - gamma), before clipping.

    >>> m = mdp.Dmdp.from_dense([[0.5, 0.5], [1.0, 0.0]], [1.0, 0.0], 0.99, [1, 1])
    >>> round(sparsity_discount(m), 6)
    0.816497
    """
    return max(math.sqrt(m.n_pairs / m.nnz), 1 - m.gamma)


def runtime_profile(m: mdp.Dmdp, eps: float, mode = LoopType.REUSE, delta: float = 0.1, settings = None) -> RuntimeProfile:
    """
    The sparsity-driven choice of gamma' and the batch and sample queries a vrvi-backed
    proximal reward run will make with it.

    1 - gamma' is kept in (1 - gamma, 1 - 1e-6]; a clipped value raises a :class:`DiscountClipWarning`.
    """
    mode = LoopType.parse(mode)
    chosen = sparsity_discount(m)
    low = 1 - m.gamma
    one_minus = min(max(chosen, low * (1 + 1e-9)), MAX_ONE_MINUS)
    clipped = one_minus != chosen

    if clipped:
        message = [
            f"The sparsity rule picked 1 - gamma' = {chosen:.6g}, outside (1 - gamma, 1 - 1e-6].",
            f"Using 1 - gamma' = {one_minus:.6g} instead.",
            ]
        warnings.warn(" ".join(message), DiscountClipWarning)

    gamma_prime = 1 - one_minus
    plan = mdp.prm_plan(m, eps, gamma_prime, delta, settings)
    epochs = plan.schedule.n_epochs
    draws = 2 if mode is LoopType.REUSE else plan.n_outer + 1

    return RuntimeProfile(
        gamma_prime = gamma_prime,
        one_minus_gamma_prime = one_minus,
        clipped = clipped,
        n_outer = plan.n_outer,
        # One sub-reward query and one anchor per epoch in every sub-solve; the final call also certifies its policy.
        batch_queries = plan.n_outer * (epochs + 1) + epochs + 2,
        sample_queries = draws * plan.schedule.sample_queries,
        plan = plan,
        )
