from __future__ import annotations

import dataclasses
import typing

import numpy
import scipy.sparse

from reuse_vr.errors import ParameterRangeError, ProblemValidationError


@dataclasses.dataclass(frozen = True, eq = False)
class Dmdp:
    """
    A discounted MDP with one row of ``transitions`` per state-action pair.

    Pairs are ordered by state, then by action: ``pair_states`` is nondecreasing and every state
    has at least one action. Top-level problems have rewards in [0, 1]; sub-problems built with
    :meth:`with_rewards` only keep r >= 0.
    """

    transitions: scipy.sparse.csr_matrix
    rewards: numpy.ndarray
    gamma: float
    pair_states: numpy.ndarray
    bounded_rewards: bool = True
    action_labels: typing.Optional[typing.Tuple[typing.Tuple, ...]] = dataclasses.field(default = None, repr = False)
    offsets: numpy.ndarray = dataclasses.field(init = False, repr = False)

    def __post_init__(self) -> None:
        transitions = scipy.sparse.csr_matrix(self.transitions, dtype = float)
        transitions.eliminate_zeros()
        rewards = numpy.array(self.rewards, dtype = float).ravel()
        pair_states = numpy.array(self.pair_states, dtype = numpy.int64).ravel()
        object.__setattr__(self, 'transitions', transitions)
        object.__setattr__(self, 'rewards', rewards)
        object.__setattr__(self, 'pair_states', pair_states)
        object.__setattr__(self, 'gamma', float(self.gamma))

        violations = list(self._violations())

        if violations:
            raise ProblemValidationError(violations)

        offsets = numpy.searchsorted(pair_states, numpy.arange(self.n_states + 1))
        object.__setattr__(self, 'offsets', offsets)

    def _violations(self) -> typing.Iterator[typing.Tuple[list, str]]:
        n_pairs, n_states = self.transitions.shape

        if len(self.rewards) != n_pairs:
            yield ['rewards'], f"{len(self.rewards)} rewards for {n_pairs} state-action pairs"

        if len(self.pair_states) != n_pairs:
            yield ['actions', 'count'], f"{len(self.pair_states)} pair states for {n_pairs} state-action pairs"
            return

        if (numpy.diff(self.pair_states) < 0).any():
            yield ['actions', 'order'], "pairs must be ordered by state"

        missing = sorted(set(range(n_states)) - set(self.pair_states.tolist()))

        if missing:
            yield ['actions', 'missing'], f"states {missing} have no action"

        if (self.transitions.data < 0).any():
            entries = self.transitions.tocoo()
            rows = numpy.unique(entries.row[entries.data < 0]).tolist()
            yield ['transitions', 'negative'], f"negative probabilities in pairs {rows}"

        sums = numpy.asarray(self.transitions.sum(axis = 1)).ravel()
        off = numpy.flatnonzero(numpy.abs(sums - 1) > 1e-12)

        if len(off):
            yield ['transitions', 'stochastic'], f"rows of pairs {off.tolist()} do not sum to 1"

        if not numpy.isfinite(self.rewards).all() or (self.rewards < 0).any():
            yield ['rewards'], "rewards must be finite and nonnegative"

        elif self.bounded_rewards and (self.rewards > 1).any():
            yield ['rewards'], "rewards must lie in [0, 1]"

        if not 0 < self.gamma < 1:
            yield ['gamma'], f"gamma = {self.gamma} is not in (0, 1)"

    @classmethod
    def from_dense(cls, transitions, rewards, gamma: float, action_counts: typing.Sequence[int], **kwargs) -> Dmdp:
        """Build from a dense (A_tot, S) transition table and the number of actions of every state."""
        pair_states = numpy.repeat(numpy.arange(len(action_counts)), action_counts)
        return cls(scipy.sparse.csr_matrix(numpy.asarray(transitions, dtype = float)), rewards, gamma, pair_states, **kwargs)

    @property
    def n_states(self) -> int:
        return self.transitions.shape[1]

    @property
    def n_pairs(self) -> int:
        return self.transitions.shape[0]

    @property
    def nnz(self) -> int:
        return int(self.transitions.nnz)

    @property
    def action_counts(self) -> numpy.ndarray:
        return numpy.diff(self.offsets)

    @property
    def value_bound(self) -> float:
        """max r / (1 - gamma), an upper bound on every value of the problem."""
        return float(self.rewards.max()) / (1 - self.gamma)

    def with_rewards(self, rewards) -> Dmdp:
        return dataclasses.replace(self, rewards = rewards, bounded_rewards = False)

    def with_gamma(self, gamma: float) -> Dmdp:
        if not 0 < gamma < 1:
            raise ParameterRangeError('gamma', gamma, '0 < gamma < 1')

        return dataclasses.replace(self, gamma = gamma)

    def policy_transitions(self, policy) -> scipy.sparse.csr_matrix:
        return self.transitions[policy.pairs(self)]
