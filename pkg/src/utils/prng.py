"""
Seeded Generator
================
xoshiro256** with splitmix64 seeding.

The generator is fixed so that a (count, seed) pair always reproduces the
same dataset bytes on every platform.
"""

import numpy as np

MASK64 = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class SplitMix64:
    """Seed expander; also a usable 64-bit generator on its own."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


class Xoshiro256StarStar:
    """
    xoshiro256** 64-bit generator.

    Args:
        seed: Any unsigned integer; expanded to 256 bits of state by splitmix64
    """

    def __init__(self, seed: int = 0):
        expander = SplitMix64(seed)
        self._s = [expander.next_u64() for _ in range(4)]

    def next_u64(self) -> int:
        s = self._s
        result = (_rotl((s[1] * 5) & MASK64, 7) * 9) & MASK64
        t = (s[1] << 17) & MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def next_unit(self) -> float:
        """Uniform double in [0, 1): top 53 bits * 2^-53."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def unit_array(self, n: int) -> np.ndarray:
        """n uniform doubles in [0, 1) as a float64 array."""
        top_bits = np.fromiter((self.next_u64() >> 11 for _ in range(n)), dtype=np.uint64, count=n)
        return np.ldexp(top_bits.astype(np.float64), -53)
