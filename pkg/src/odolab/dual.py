"""The dual group: roots of unity stored as reduced fractions.

A dual element is e^{2 pi i k/s} kept as the reduced pair (k, s), so order,
multiplication and subgroup membership are exact.  Character evaluation
returns binary64 complex values, exact (+-1, +-i) whenever the order
divides 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import NotInGroup, OutOfRange
from .scales import Scale


@dataclass(frozen=True)
class DualElement:
    """The root of unity e^{2 pi i k/s} with 0 <= k < s and gcd(k, s) = 1."""

    k: int
    s: int

    def __post_init__(self):
        if self.s < 1 or not 0 <= self.k < self.s or gcd(self.k, self.s) > 1:
            raise ValueError(f"unreduced root {self.k}/{self.s}; use make_root")

    @property
    def order(self) -> int:
        return self.s

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.k, self.s)

    @property
    def is_identity(self) -> bool:
        return self.s == 1

    def __mul__(self, other):
        if not isinstance(other, DualElement):
            return NotImplemented
        return make_root(self.k * other.s + other.k * self.s, self.s * other.s)

    def inverse(self) -> "DualElement":
        return make_root(-self.k, self.s)

    conjugate = inverse

    def __pow__(self, n: int) -> "DualElement":
        return make_root(self.k * n, self.s)

    def to_complex(self) -> complex:
        return eval_char(self, 1)

    def __repr__(self):
        return f"DualElement({self.k}, {self.s})"

    def __str__(self):
        return f"e(2pi*{self.k}/{self.s})" if self.s > 1 else "1"


IDENTITY = DualElement(0, 1)

_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)


def make_root(k: int, s: int) -> DualElement:
    """The reduced root of unity (k mod s)/s; its order is the denominator."""
    if s < 1:
        raise ValueError(f"order must be positive, got {s}")
    k %= s
    g = gcd(k, s)
    return DualElement(k // g, s // g)


def eval_char(z: DualElement, x: int) -> complex:
    """The character value z^x as binary64; exact when order(z) divides 4."""
    t = (z.k * x) % z.s
    if z.s == 1:
        return 1 + 0j
    if z.s == 2:
        return -1 + 0j if t else 1 + 0j
    if z.s == 4:
        return _QUARTER_TURNS[t]
    angle = 2.0 * math.pi * t / z.s
    return complex(math.cos(angle), math.sin(angle))


def level_of(z: DualElement, scale: Scale) -> int:
    """Smallest m with order(z) dividing s_m."""
    for m in range(scale.depth + 1):
        if scale.s(m) % z.s == 0:
            return m
    raise NotInGroup(f"order {z.s} does not divide s_M = {scale.s(scale.depth)}")


def scale_form(z: DualElement, scale: Scale) -> tuple[int, int]:
    """The unique (m, j) with z = e^{2 pi i j/s_m} and s_m/s_{m-1} not dividing j.

    The identity maps to (0, 0).
    """
    if z.is_identity:
        return (0, 0)
    m = level_of(z, scale)
    return (m, z.k * (scale.s(m) // z.s))


def enumerate_subgroup(scale: Scale, m: int) -> tuple[DualElement, ...]:
    """All s_m roots of unity z with z^{s_m} = 1, ordered by (order, numerator)."""
    if m < 0 or m > scale.depth:
        raise OutOfRange(f"level {m} outside [0, {scale.depth}]")
    return _subgroup_of_order(scale.s(m))


@lru_cache(maxsize=None)
def _subgroup_of_order(n: int) -> tuple[DualElement, ...]:
    return tuple(sorted((make_root(j, n) for j in range(n)),
                        key=lambda z: (z.s, z.k)))
