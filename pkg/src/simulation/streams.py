"""
Seeded random streams.

Every run owns a ``numpy.random.SeedSequence`` built from its 64-bit seed and
spawns one PCG64 stream per arrival process, per routing-choice sequence and
per randomly-serving station, in that order. Replication seeds come from
``split_seed``.
"""

import numpy as np

_BATCH = 4096


def split_seed(base_seed: int, index: int) -> int:
    """seed_i = first uint64 word of SeedSequence(base_seed, spawn_key=(index,))."""
    sequence = np.random.SeedSequence(base_seed, spawn_key=(index,))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


class RandomStream:
    """Buffered draws from one PCG64 generator."""

    __slots__ = ("_rng", "_exp", "_exp_pos", "_uni", "_uni_pos")

    def __init__(self, sequence: np.random.SeedSequence):
        self._rng = np.random.Generator(np.random.PCG64(sequence))
        self._exp = np.empty(0)
        self._exp_pos = 0
        self._uni = np.empty(0)
        self._uni_pos = 0

    def exponential(self) -> float:
        """Standard exponential variate (mean 1)."""
        if self._exp_pos == len(self._exp):
            self._exp = self._rng.standard_exponential(_BATCH)
            self._exp_pos = 0
        value = self._exp[self._exp_pos]
        self._exp_pos += 1
        return float(value)

    def uniform(self) -> float:
        """Uniform variate on [0, 1)."""
        if self._uni_pos == len(self._uni):
            self._uni = self._rng.random(_BATCH)
            self._uni_pos = 0
        value = self._uni[self._uni_pos]
        self._uni_pos += 1
        return float(value)


def spawn_streams(seed: int, count: int) -> list[RandomStream]:
    if seed < 0:
        raise ValueError(f"seed must be a non-negative 64-bit integer, got {seed}")
    return [RandomStream(child) for child in np.random.SeedSequence(seed).spawn(count)]
