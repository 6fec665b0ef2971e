from __future__ import annotations

import typing

import numpy

from reuse_vr.errors import SampleKeyError

from .. import oracles


class OracleBundle:
    """
    Base of the counting oracles.

    A bundle owns one aggregate ledger plus one ledger per sample channel. Drawing keys
    (:meth:`charge`) counts every draw; :meth:`grant` only counts keys that were never drawn
    on that channel, so re-evaluating a granted component is free.
    """

    channels: typing.Tuple[str, ...] = ()

    def __init__(self) -> None:
        self.ledger = oracles.QueryLedger()
        self.channel_ledgers = {channel: oracles.QueryLedger() for channel in self.channels}

    def key_bound(self, channel: str) -> int:
        raise NotImplementedError

    def batch_query(self, x):
        raise NotImplementedError

    def sample_query(self, key, channel: typing.Optional[str] = None):
        raise NotImplementedError

    def record_batch(self) -> None:
        self.ledger.record_batch()

    def _channel(self, channel: typing.Optional[str]) -> str:
        if channel is None:
            if len(self.channels) != 1:
                raise ValueError(f"A channel among {self.channels} must be named.")

            return self.channels[0]

        if channel not in self.channel_ledgers:
            raise ValueError(f"Unknown channel '{channel}'; this bundle has {self.channels}.")

        return channel

    def check_keys(self, channel: str, keys) -> numpy.ndarray:
        keys = numpy.asarray(keys, dtype = numpy.int64).ravel()
        bound = self.key_bound(channel)
        outside = (keys < 0) | (keys >= bound)

        if outside.any():
            raise SampleKeyError(channel, int(keys[outside][0]), f"0 <= key < {bound}")

        return keys

    def charge(self, channel: str, keys) -> numpy.ndarray:
        channel = self._channel(channel)
        keys = self.check_keys(channel, keys)
        values = keys.tolist()
        self.channel_ledgers[channel].record_samples(values)
        self.ledger.record_samples((channel, key) for key in values)
        return keys

    def grant(self, channel: str, key: int) -> int:
        channel = self._channel(channel)
        key = int(self.check_keys(channel, [key])[0])

        if not self.channel_ledgers[channel].has(key):
            self.charge(channel, [key])

        return key

    def grant_many(self, channel: str, keys) -> numpy.ndarray:
        """:meth:`grant` for an array of keys; returns them as validated integers."""
        channel = self._channel(channel)
        keys = self.check_keys(channel, keys)
        ledger = self.channel_ledgers[channel]
        fresh = [key for key in numpy.unique(keys).tolist() if not ledger.has(key)]

        if fresh:
            self.charge(channel, fresh)

        return keys

    def snapshot(self) -> oracles.LedgerSnapshot:
        return self.ledger.snapshot()

    def channel_snapshots(self) -> typing.Dict[str, oracles.LedgerSnapshot]:
        return {channel: ledger.snapshot() for channel, ledger in self.channel_ledgers.items()}
