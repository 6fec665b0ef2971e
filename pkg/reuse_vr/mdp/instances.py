from __future__ import annotations

import typing

import numpy

from .. import mdp


def random_dmdp(
        n_states: int,
        n_actions: int,
        rng: numpy.random.Generator,
        gamma: float = 0.9,
        successors: typing.Optional[int] = None,
        ) -> mdp.Dmdp:
    """
    Uniform rewards in [0, 1] and, for every pair, Dirichlet probabilities over ``successors``
    distinct states chosen at random (all states when None).
    """
    successors = n_states if successors is None else min(successors, n_states)
    n_pairs = n_states * n_actions
    table = numpy.zeros((n_pairs, n_states))

    for pair in range(n_pairs):
        support = rng.choice(n_states, size = successors, replace = False)
        table[pair, support] = rng.dirichlet(numpy.ones(successors))

    return mdp.Dmdp.from_dense(table, rng.random(n_pairs), gamma, [n_actions] * n_states)


def deterministic_chain(n_states: int, gamma: float = 0.9) -> mdp.Dmdp:
    """
    States 0 -> 1 -> ... -> n - 1, the last one absorbing with reward 1. Every state also has a
    'stay' action with reward 0, so the optimal policy always moves forward.
    """
    table = numpy.zeros((2 * n_states, n_states))
    rewards = numpy.zeros(2 * n_states)

    for state in range(n_states):
        table[2 * state, min(state + 1, n_states - 1)] = 1.0
        table[2 * state + 1, state] = 1.0

    rewards[2 * (n_states - 1)] = 1.0
    return mdp.Dmdp.from_dense(table, rewards, gamma, [2] * n_states)
