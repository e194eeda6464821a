"""Deterministic 64-bit splittable pseudo-random generator.

Every randomized operation in this package takes an explicit seed and draws
from this generator, so results are reproducible bit-for-bit across platforms
and independent of scheduling.  The stream is SplitMix64 (Steele, Lea,
Flood 2014): state advances by the golden-ratio increment and each output is
a finalizer-mixed copy of the state.  Child seeds are derived by mixing the
parent seed with the mixed child index (`derive_seed`), so per-trial streams
never overlap in practice.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Child seed for sub-stream `index` of the stream seeded by `seed`."""
    return _mix((seed ^ _mix(((index + 1) * _GOLDEN) & _MASK64)) & _MASK64)


class SplitMix64:
    """Sequential SplitMix64 stream."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix(self._state)

    def uniform(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), bias-free via rejection."""
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        limit = ((1 << 64) // n) * n
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def split(self, index: int) -> "SplitMix64":
        return SplitMix64(derive_seed(self._state, index))
