"""Deterministic pseudo-random generation.

Every randomized operation in this package draws from splitmix64, a tiny
64-bit generator with a well-known reference implementation.  Using a
fixed, self-contained algorithm keeps seeded outputs byte-reproducible
across Python versions and across reimplementations in other languages.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64 stream seeded by a 64-bit integer (larger seeds are truncated)."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), via rejection to avoid modulo bias."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (_MASK64 + 1) - ((_MASK64 + 1) % bound)
        while True:
            draw = self.next_u64()
            if draw < limit:
                return draw % bound

    def chance(self, probability: float) -> bool:
        """True with the given probability, using 53 bits of the next draw."""
        if not 0.0 <= probability <= 1.0:
            raise ValueError(f"probability must lie in [0, 1], got {probability}")
        return (self.next_u64() >> 11) < probability * (1 << 53)
