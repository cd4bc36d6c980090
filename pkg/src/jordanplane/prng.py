"""SplitMix64 pseudo-random stream used for all seeded sampling.

The algorithm is fixed so that seeded results are reproducible bit for bit
anywhere: state advances by the 64-bit golden-gamma constant and outputs
pass through the standard two-round xor-multiply finalizer.  Bounded draws
use plain modulo reduction (the tiny bias is irrelevant here and keeps the
recipe trivial to restate).
"""

from __future__ import annotations

from fractions import Fraction

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def _finalize(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit generator; same seed, same stream, anywhere."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return _finalize(self.state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in the inclusive range [lo, hi]."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def fraction(self, num_bound: int = 9, den_bound: int = 3) -> Fraction:
        """Random rational with |numerator| <= num_bound, denominator <= den_bound."""
        num = self.randint(-num_bound, num_bound)
        den = self.randint(1, den_bound)
        return Fraction(num, den)

    def nonzero_fraction(self, num_bound: int = 9, den_bound: int = 3) -> Fraction:
        while True:
            q = self.fraction(num_bound, den_bound)
            if q:
                return q


def stream_for(seed: int, *salts: int) -> SplitMix64:
    """Derive an independent stream from a seed and integer salts.

    state starts at seed mod 2^64 and absorbs each salt v via
    state = finalize((state XOR v) + GAMMA).  Documented in the README so
    the sampling is reproducible outside this codebase.
    """
    state = seed & MASK64
    for v in salts:
        state = _finalize(((state ^ (v & MASK64)) + GAMMA) & MASK64)
    return SplitMix64(state)
