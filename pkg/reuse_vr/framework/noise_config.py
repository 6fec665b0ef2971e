from __future__ import annotations

import dataclasses
import typing

from reuse_vr.errors import ParameterRangeError

from .. import framework


@dataclasses.dataclass(frozen = True)
class NoiseConfig:
    """
    Uniform noise of half-width ``tau``; grid mode first rounds onto a grid of pitch ``beta``.

        >>> NoiseConfig(tau = 0.3, mode = 'grid', beta = 0.1).mode
        <NoiseMode.GRID: 'grid'>
    """

    tau: float = 0.0
    mode: framework.NoiseMode = framework.NoiseMode.CONTINUOUS
    beta: typing.Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, 'mode', framework.NoiseMode(self.mode))

        if not self.tau >= 0:
            raise ParameterRangeError('tau', self.tau, 'tau >= 0')

        if self.mode is framework.NoiseMode.GRID:
            if self.beta is None or not 0 < self.beta <= self.tau:
                raise ParameterRangeError('beta', self.beta, f'0 < beta <= tau = {self.tau}')

    def to_dict(self) -> dict:
        return {'tau': self.tau, 'mode': self.mode.value, 'beta': self.beta}
