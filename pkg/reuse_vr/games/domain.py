from __future__ import annotations

import enum


class Domain(str, enum.Enum):
    """
    Feasible set of a matrix game: x always lives in the unit Euclidean ball; y lives in the unit
    ball (``BALL_BALL``) or in the probability simplex (``BALL_SIMPLEX``).
    """

    BALL_BALL = 'ball_ball'
    BALL_SIMPLEX = 'ball_simplex'

    @property
    def simplex(self) -> bool:
        return self is Domain.BALL_SIMPLEX
