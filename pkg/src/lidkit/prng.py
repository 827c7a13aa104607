"""Deterministic PRNG and hashing for reproducible corpus splits.

The generator is splitmix64 (Steele, Lea, Flood 2014) with its standard
constants; string hashing is FNV-1a 64-bit. Both are fixed here, with
constants written out, so a split can be reproduced by any implementation
from the documented recipe alone.
"""

from __future__ import annotations

from typing import MutableSequence

_MASK64 = (1 << 64) - 1

SPLITMIX64_GAMMA = 0x9E3779B97F4A7C15
SPLITMIX64_MIX1 = 0xBF58476D1CE4E5B9
SPLITMIX64_MIX2 = 0x94D049BB133111EB

FNV64_OFFSET = 0xCBF29CE484222325
FNV64_PRIME = 0x100000001B3


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + SPLITMIX64_GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * SPLITMIX64_MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * SPLITMIX64_MIX2) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Unbiased draw from [0, n) via rejection sampling."""
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        bound = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < bound:
                return r % n


def fnv1a64(text: str) -> int:
    h = FNV64_OFFSET
    for byte in text.encode("utf-8"):
        h ^= byte
        h = (h * FNV64_PRIME) & _MASK64
    return h


def fisher_yates(items: MutableSequence, rng: SplitMix64) -> None:
    """In-place Fisher-Yates shuffle driven by the given generator."""
    for i in range(len(items) - 1, 0, -1):
        j = rng.randrange(i + 1)
        items[i], items[j] = items[j], items[i]
