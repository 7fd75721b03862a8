"""Deterministic sampling via an explicitly specified xorshift64* stream.

The recurrence (all arithmetic mod 2^64):

    state ^= state >> 12
    state ^= state << 25
    state ^= state >> 27
    output = state * 0x2545F4914F6CDD1D

A uniform double in [0, 1) takes the top 53 bits of the output.  Per-check
streams are seeded as splitmix64(seed XOR fnv1a64(label)) so every check
draws an independent, reproducible sequence.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
_MULT = 0x2545F4914F6CDD1D
_GAMMA = 0x9E3779B97F4A7C15


def fnv1a64(text: str) -> int:
    h = 0xCBF29CE484222325
    for b in text.encode("utf-8"):
        h ^= b
        h = (h * 0x100000001B3) & MASK64
    return h


def splitmix64(x: int) -> int:
    z = (x + _GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


class Xorshift64Star:
    """xorshift64* generator; the zero state is remapped to a fixed constant."""

    def __init__(self, seed: int):
        s = seed & MASK64
        self.state = s if s != 0 else _GAMMA

    def next_u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s = (s ^ (s << 25)) & MASK64
        s ^= s >> 27
        self.state = s
        return (s * _MULT) & MASK64

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        x = (self.next_u64() >> 11) * 2.0**-53
        return lo + (hi - lo) * x

    def tangent(self, dim: int) -> np.ndarray:
        """Tangent vector with components uniform in [-1, 1)."""
        return np.array([self.uniform(-1.0, 1.0) for _ in range(dim)])

    def ball_point(self, dim: int, radius: float) -> np.ndarray:
        """Uniform point in the open ball of the given radius, by rejection."""
        while True:
            p = np.array([self.uniform(-radius, radius) for _ in range(dim)])
            if float(np.linalg.norm(p)) < radius:
                return p


def stream(seed: int, label: str) -> Xorshift64Star:
    """Independent named substream of the master seed."""
    return Xorshift64Star(splitmix64((seed & MASK64) ^ fnv1a64(label)))
