from __future__ import annotations

import dataclasses

import numpy

from reuse_vr.errors import LoopConfigurationError, ParameterRangeError

from .. import framework


@dataclasses.dataclass(frozen = True)
class OuterConfig:
    loop_type: framework.LoopType
    n_outer: int
    weights: numpy.ndarray
    noise: framework.NoiseConfig = dataclasses.field(default_factory = framework.NoiseConfig)
    master_seed: int = 0
    allow_zero_noise: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, 'loop_type', framework.LoopType.parse(self.loop_type))

        if int(self.n_outer) != self.n_outer or self.n_outer < 1:
            raise LoopConfigurationError(f"n_outer must be a positive integer, got {self.n_outer}.")

        weights = numpy.array(self.weights, dtype = float).ravel()

        if len(weights) != self.n_outer:
            raise LoopConfigurationError(f"Expected {self.n_outer} weights, got {len(weights)}.")

        if (weights < 0).any() or abs(weights.sum() - 1) > 1e-9:
            raise LoopConfigurationError(f"Weights must be nonnegative and sum to 1, got {weights.tolist()}.")

        if not 0 <= int(self.master_seed) < 2 ** 64:
            raise ParameterRangeError('master_seed', self.master_seed, '[0, 2**64)')

        weights.setflags(write = False)
        object.__setattr__(self, 'weights', weights)

    def with_loop_type(self, loop_type) -> OuterConfig:
        return dataclasses.replace(self, loop_type = framework.LoopType.parse(loop_type))

    def to_dict(self) -> dict:
        return {
            'loop_type': self.loop_type.value,
            'n_outer': int(self.n_outer),
            'weights': self.weights.tolist(),
            'noise': self.noise.to_dict(),
            'master_seed': int(self.master_seed),
            }
