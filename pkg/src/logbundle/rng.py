"""Deterministic random number generation.

All randomness in the library and the CLI flows from XorShift64, a 64-bit
xorshift generator with the fixed recurrence

    x ^= (x << 13) mod 2^64
    x ^= (x >> 7)
    x ^= (x << 17) mod 2^64

started from the user-supplied seed (a seed of 0 is replaced by the odd
constant 0x9E3779B97F4A7C15, since the all-zero state is a fixed point).
Identical seeds give identical streams on every platform, so every sampled
certificate in tests and CLI runs is reproducible bit for bit.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_ZERO_SEED_STATE = 0x9E3779B97F4A7C15


class XorShift64:
    """xorshift generator over 64-bit state; see module docstring."""

    def __init__(self, seed: int = 0):
        if seed < 0:
            raise ValueError("seed must be a non-negative integer")
        state = seed & _MASK
        self._state = state if state != 0 else _ZERO_SEED_STATE

    def next_u64(self) -> int:
        x = self._state
        x ^= (x << 13) & _MASK
        x ^= x >> 7
        x ^= (x << 17) & _MASK
        self._state = x
        return x

    def rand_int(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo reduction, documented)."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def rand_nonzero_int(self, bound: int) -> int:
        while True:
            v = self.rand_int(-bound, bound)
            if v != 0:
                return v
