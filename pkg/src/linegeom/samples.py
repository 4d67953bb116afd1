"""Deterministic rational sample sequence.

Every construction that needs "random" input draws from
``random.Random(seed)`` so that runs are reproducible: integers are drawn
uniformly from ``[-bound, bound]`` and, when ``den > 1``, divided by a
denominator drawn from ``[1, den]``.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, List

__all__ = ["RationalSequence", "rational_vectors"]


class RationalSequence:
    def __init__(self, seed: int = 0, bound: int = 9, den: int = 1):
        self.rng = random.Random(seed)
        self.bound = bound
        self.den = den

    def scalar(self, nonzero: bool = False) -> Fraction:
        while True:
            num = self.rng.randint(-self.bound, self.bound)
            d = self.rng.randint(1, self.den) if self.den > 1 else 1
            if num or not nonzero:
                return Fraction(num, d)

    def vector(self, n: int, nonzero_entries: bool = False) -> List[Fraction]:
        while True:
            v = [self.scalar(nonzero_entries) for _ in range(n)]
            if any(v):
                return v

    def int(self, lo: int, hi: int) -> int:
        return self.rng.randint(lo, hi)


def rational_vectors(n: int, count: int, seed: int = 0, bound: int = 9,
                     nonzero_entries: bool = False) -> Iterator[List[Fraction]]:
    seq = RationalSequence(seed, bound)
    for _ in range(count):
        yield seq.vector(n, nonzero_entries)
