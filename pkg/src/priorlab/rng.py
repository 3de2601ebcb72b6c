"""Deterministic, splittable random-number streams.

Every stochastic routine in the library consumes an :class:`RngStream`.
One generator algorithm (PCG64) is used everywhere; independent streams
are derived by child-seed mixing through ``numpy.random.SeedSequence``
spawn keys, never by sharing generator state.  A stream is therefore a
pure function of ``(seed, path)``, which is what makes every table the
library produces reproducible bit-for-bit under a fixed environment.
"""

from __future__ import annotations

import numpy as np


class RngStream:
    """A single-owner PCG64 stream addressed by ``(seed, path)``.

    ``path`` is the tuple of child indices walked from the root stream.
    ``child(i, j, ...)`` derives a statistically independent stream by
    extending the path; the derivation goes through SeedSequence's
    entropy-mixing hash, so child streams never overlap with the parent
    or with each other.
    """

    def __init__(self, seed: int, path: tuple[int, ...] = ()):
        if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
            raise TypeError("seed must be an integer")
        if seed < 0 or seed >= 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        self.seed = int(seed)
        self.path = tuple(int(p) for p in path)
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=self.path)
        self.generator = np.random.Generator(np.random.PCG64(ss))

    def child(self, *indices: int) -> "RngStream":
        """Derive an independent stream without touching this stream's state."""
        return RngStream(self.seed, self.path + tuple(indices))

    def uniform01(self, size=None):
        """Uniform draws on [0, 1)."""
        return self.generator.random(size)

    def standard_normal(self, size=None):
        return self.generator.standard_normal(size)

    def __repr__(self):
        return f"RngStream(seed={self.seed}, path={self.path})"
