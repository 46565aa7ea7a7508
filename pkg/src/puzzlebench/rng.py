"""Portable seeded random numbers.

A splitmix64 generator with the standard constants. It is tiny, fully
specified, and reproduces bit-identically for a given seed on any platform,
which is what the simulation fixtures rely on. Not cryptographic.

State update:  s' = (s + 0x9E3779B97F4A7C15) mod 2^64
Output mix:    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
               z ^= z >> 27; z *= 0x94D049BB133111EB
               z ^= z >> 31
"""

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit generator; one instance per simulation stream."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix(self._state)

    def randrange(self, n: int) -> int:
        """Integer in [0, n) via the multiply-shift reduction.

        Bias is at most n / 2^64, negligible for the small n used here.
        """
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        return (self.next_u64() * n) >> 64


def derive(seed: int, index: int) -> int:
    """Derive an independent stream seed for shard `index` of `seed`."""
    return _mix((seed & _MASK64) ^ _mix((index + 1) * _GOLDEN))
