from __future__ import annotations

import typing
import zlib

import numpy

from reuse_vr.errors import ParameterRangeError

OBLIVIOUS = 'oblivious'
ADAPTIVE = 'adaptive'
NOISE = 'noise'
TRIAL = 'trial'

MAX_SEED = 2 ** 64


def _label_key(label: str) -> int:
    return zlib.crc32(label.encode('utf-8'))


class RandomStreams:
    """
    Labelled, replayable random streams derived from one 64-bit master seed.

    Streams with different labels are independent; the same label always yields the same stream:

        >>> streams = RandomStreams(7)
        >>> a = streams.generator('oblivious').integers(1000, size = 3)
        >>> b = streams.generator('oblivious').integers(1000, size = 3)
        >>> bool((a == b).all())
        True
    """

    master_seed: int
    path: typing.Tuple[int, ...]

    def __init__(self, master_seed: int, path: typing.Tuple[int, ...] = ()) -> None:
        if not 0 <= int(master_seed) < MAX_SEED:
            raise ParameterRangeError('master_seed', master_seed, '[0, 2**64)')

        self.master_seed = int(master_seed)
        self.path = tuple(int(item) for item in path)

    def _key(self, label: str, indices: typing.Sequence[int]) -> typing.Tuple[int, ...]:
        return (*self.path, _label_key(label), *(int(index) for index in indices))

    def sequence(self, label: str, *indices: int) -> numpy.random.SeedSequence:
        return numpy.random.SeedSequence(entropy = self.master_seed, spawn_key = self._key(label, indices))

    def child(self, label: str, *indices: int) -> RandomStreams:
        return RandomStreams(self.master_seed, self._key(label, indices))

    def generator(self, label: str, *indices: int) -> numpy.random.Generator:
        return numpy.random.Generator(numpy.random.Philox(self.sequence(label, *indices)))

    def trial(self, index: int) -> RandomStreams:
        return self.child(TRIAL, index)

    def __repr__(self) -> str:
        return f"RandomStreams(master_seed = {self.master_seed}, path = {self.path})"
