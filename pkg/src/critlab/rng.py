"""Deterministic, stream-addressed random number generation.

Every sampling routine in critlab takes an :class:`RngStream`. A stream is
fully determined by a 64-bit ``seed`` and a 64-bit ``stream_id``; two streams
built from the same pair produce identical draw sequences on every run and
under any thread schedule. Distinct stream ids (e.g. one per Monte Carlo
trial) are statistically independent, which makes trials embarrassingly
parallel without shared state.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def mix64(x: int) -> int:
    """splitmix64 finalizer: a 64-bit bijective mixing function."""
    x = x & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (x ^ (x >> 31)) & _MASK64


class RngStream:
    """A counter-keyed random stream: (seed, stream_id) -> reproducible sequence.

    The underlying generator is Philox with the (seed, stream_id) pair as its
    key, so the draw sequence is a pure function of the pair. A single stream
    object is stateful across draws and must not be shared between concurrent
    callers; derive substreams instead.
    """

    def __init__(self, seed: int, stream_id: int = 0):
        self.seed = int(seed) & _MASK64
        self.stream_id = int(stream_id) & _MASK64
        self._gen = None

    @property
    def generator(self) -> np.random.Generator:
        if self._gen is None:
            self._gen = np.random.Generator(
                np.random.Philox(key=[self.seed, self.stream_id])
            )
        return self._gen

    def derive(self, *indices: int) -> "RngStream":
        """Return a fresh stream keyed by this stream's id mixed with `indices`."""
        sid = self.stream_id
        for ix in indices:
            sid = mix64(sid ^ mix64(int(ix) + 0x9E3779B97F4A7C15))
        return RngStream(self.seed, sid)

    def __repr__(self):
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"
