from __future__ import annotations

import dataclasses

import numpy

from reuse_vr.oracles import OracleBundle


@dataclasses.dataclass
class OuterProblem:
    """The initial point of an outer run and the oracle bundle every query of the run goes through."""

    u0: numpy.ndarray
    bundle: OracleBundle
    name: str = 'problem'
