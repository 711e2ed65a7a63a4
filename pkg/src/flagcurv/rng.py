"""Portable seeded random number generation.

Reports must reproduce bit-for-bit across implementations, so sampling is
driven by an explicitly specified 64-bit generator rather than a library
RNG whose stream is an implementation detail.

The update function is splitmix64 (Steele, Lea, Flood 2014):

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state
    z <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
    z <- (z XOR (z >> 27)) * 0x94D049BB133111EB   mod 2^64
    output: z XOR (z >> 31)

Doubles are drawn as (output >> 11) * 2^-53, uniform on [0, 1).
Normals use the Box-Muller transform on consecutive uniforms, with the
spare value cached.
"""

from __future__ import annotations

import math

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Deterministic 64-bit generator with a documented update function."""

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64
        self._spare_normal: float | None = None

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def normal(self) -> float:
        """Standard normal via Box-Muller; consumes two uniforms per pair."""
        if self._spare_normal is not None:
            z = self._spare_normal
            self._spare_normal = None
            return z
        u1 = self.random()
        if u1 <= 0.0:
            u1 = 2.0 ** -53
        u2 = self.random()
        r = math.sqrt(-2.0 * math.log(u1))
        theta = 2.0 * math.pi * u2
        self._spare_normal = r * math.sin(theta)
        return r * math.cos(theta)

    def normal_vector(self, n: int) -> np.ndarray:
        return np.array([self.normal() for _ in range(n)], dtype=float)

    def uniform_vector(self, n: int, lo: float, hi: float) -> np.ndarray:
        return np.array([self.uniform(lo, hi) for _ in range(n)], dtype=float)

    def direction(self, n: int, min_norm: float = 1e-3) -> np.ndarray:
        """Nonzero direction with standard-normal components."""
        while True:
            v = self.normal_vector(n)
            if np.linalg.norm(v) >= min_norm:
                return v
