from __future__ import annotations

import json
import typing

import numpy
import scipy.sparse

from reuse_vr.errors import ProblemParsingError, ProblemValidationError

from .. import mdp


def read_dmdp(data: dict, source: str = '<dmdp>', bounded_rewards: bool = True) -> mdp.Dmdp:
    """
    Build a Dmdp from the JSON layout

        {"states": n, "actions": [[labels of state 0], ...],
         "transitions": [{"s": s, "a": label, "probs": [[s', p], ...]}, ...],
         "rewards": [one per pair, state-major], "gamma": g}

    Every violation is reported at once through :class:`ProblemValidationError`.
    """
    violations: typing.List[typing.Tuple[list, str]] = []

    for key in ('states', 'actions', 'transitions', 'rewards', 'gamma'):
        if key not in data:
            violations.append(([source, key], "missing"))

    if violations:
        raise ProblemValidationError(violations)

    n_states = data['states']
    actions = data['actions']

    if not isinstance(n_states, int) or n_states < 1:
        violations.append(([source, 'states'], f"expected a positive integer, got {n_states!r}"))
        raise ProblemValidationError(violations)

    if not isinstance(actions, list) or len(actions) != n_states:
        violations.append(([source, 'actions'], f"expected {n_states} action lists"))
        raise ProblemValidationError(violations)

    offsets = numpy.concatenate([[0], numpy.cumsum([len(labels) for labels in actions])])
    rows: typing.List[int] = []
    columns: typing.List[int] = []
    values: typing.List[float] = []
    seen = set()

    for index, transition in enumerate(data['transitions']):
        state, label = transition.get('s'), transition.get('a')

        if not isinstance(state, int) or not 0 <= state < n_states:
            violations.append(([source, 'transitions', index, 's'], f"unknown state {state!r}"))
            continue

        if label not in actions[state]:
            violations.append(([source, 'transitions', index, 'a'], f"unknown action {label!r} of state {state}"))
            continue

        pair = int(offsets[state]) + actions[state].index(label)

        if pair in seen:
            violations.append(([source, 'transitions', index], f"duplicate transition for ({state}, {label!r})"))
            continue

        seen.add(pair)

        for successor, probability in transition.get('probs', []):
            if not isinstance(successor, int) or not 0 <= successor < n_states:
                violations.append(([source, 'transitions', index, 'probs'], f"unknown successor {successor!r}"))
                continue

            rows.append(pair)
            columns.append(successor)
            values.append(float(probability))

    n_pairs = int(offsets[-1])
    missing = sorted(set(range(n_pairs)) - seen)

    if missing:
        violations.append(([source, 'transitions', 'missing'], f"no transition for pairs {missing}"))

    if violations:
        raise ProblemValidationError(violations)

    transitions = scipy.sparse.csr_matrix((values, (rows, columns)), shape = (n_pairs, n_states))

    return mdp.Dmdp(
        transitions = transitions,
        rewards = data['rewards'],
        gamma = data['gamma'],
        pair_states = numpy.repeat(numpy.arange(n_states), numpy.diff(offsets)),
        bounded_rewards = bounded_rewards,
        action_labels = tuple(tuple(labels) for labels in actions),
        )


def load_dmdp(path: str) -> mdp.Dmdp:
    try:
        with open(path) as file:
            data = json.load(file)
    except (OSError, json.JSONDecodeError) as error:
        raise ProblemParsingError(error, path, error.__traceback__)

    return read_dmdp(data, path)


def dump_dmdp(m: mdp.Dmdp) -> dict:
    """The JSON layout of :func:`read_dmdp`."""
    labels = m.action_labels or tuple(tuple(range(count)) for count in m.action_counts)
    transitions = []

    for pair in range(m.n_pairs):
        state = int(m.pair_states[pair])
        row = m.transitions.getrow(pair)
        transitions.append({
            's': state,
            'a': labels[state][pair - int(m.offsets[state])],
            'probs': [[int(successor), float(p)] for successor, p in zip(row.indices, row.data)],
            })

    return {
        'states': m.n_states,
        'actions': [list(item) for item in labels],
        'transitions': transitions,
        'rewards': m.rewards.tolist(),
        'gamma': m.gamma,
        }
