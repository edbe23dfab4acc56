"""Odometer points at a finite level, digit expansions, and the carry map.

A point at level m is a residue mod s_m; adding 1 is the minimal dynamics
("add one and carry").  The carry-reduction map gamma strips the leading
digit block of a positive integer: gamma(x) = x mod s_{n(x)-1}, where n(x)
is the unique index with s_{n(x)-1} <= x < s_{n(x)}.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .errors import GammaOfZero, LevelMismatch, OutOfRange
from .scales import Scale


@dataclass(frozen=True)
class OdometerPoint:
    """A group element truncated at a level: the residue class mod s_level."""

    scale: Scale
    level: int
    residue: int

    def __post_init__(self):
        if self.level < 0 or self.level > self.scale.depth:
            raise OutOfRange(f"level {self.level} outside [0, {self.scale.depth}]")
        if not 0 <= self.residue < self.scale.s(self.level):
            raise OutOfRange(
                f"residue {self.residue} outside [0, {self.scale.s(self.level)})")

    @property
    def modulus(self) -> int:
        return self.scale.s(self.level)

    def project(self, m: int) -> "OdometerPoint":
        """The compatible residue at a coarser level m <= level."""
        if m > self.level:
            raise LevelMismatch(f"cannot project level {self.level} up to {m}")
        return OdometerPoint(self.scale, m, self.residue % self.scale.s(m))

    def __add__(self, other):
        if isinstance(other, OdometerPoint):
            if other.scale != self.scale or other.level != self.level:
                raise LevelMismatch("points live at different levels or scales")
            shift = other.residue
        elif isinstance(other, int):
            shift = other
        else:
            return NotImplemented
        return OdometerPoint(self.scale, self.level,
                             (self.residue + shift) % self.modulus)

    __radd__ = __add__


def shift(x: OdometerPoint) -> OdometerPoint:
    """The +1 map, a bijection of each finite level."""
    return x + 1


@dataclass(frozen=True)
class DigitVector:
    """Mixed-radix digits (x_1, ..., x_M) with 0 <= x_j < s_j / s_{j-1}."""

    scale: Scale
    digits: tuple[int, ...]

    def __post_init__(self):
        if len(self.digits) != self.scale.depth:
            raise ValueError("digit count must equal the scale depth")
        for j, d in enumerate(self.digits, start=1):
            if not 0 <= d < self.scale.ratio(j):
                raise OutOfRange(f"digit {d} at position {j} outside "
                                 f"[0, {self.scale.ratio(j)})")

    def value(self) -> int:
        return sum(d * self.scale.s(j - 1) for j, d in enumerate(self.digits, start=1))


def to_digits(x: int, scale: Scale) -> DigitVector:
    """Greedy mixed-radix expansion x = sum_j x_j s_{j-1}."""
    _check_range(x, scale)
    digits = []
    for j in range(1, scale.depth + 1):
        digits.append((x // scale.s(j - 1)) % scale.ratio(j))
    return DigitVector(scale, tuple(digits))


def from_digits(dv: DigitVector) -> int:
    return dv.value()


def n_of(x: int, scale: Scale) -> int:
    """The index n with s_{n-1} <= x < s_n; by convention 0 for x = 0."""
    _check_range(x, scale)
    if x == 0:
        return 0
    return bisect_right(scale.entries, x) + 1


def gamma(x: int, scale: Scale) -> int:
    """Carry reduction x mod s_{n(x)-1}; defined for x >= 1 only."""
    if x == 0:
        raise GammaOfZero("gamma(0) is undefined")
    return x % scale.s(n_of(x, scale) - 1)


def gamma_orbit(x: int, scale: Scale) -> list[int]:
    """[x, gamma(x), gamma^2(x), ..., 0]; strictly decreasing, ends at 0."""
    _check_range(x, scale)
    orbit = [x]
    while x > 0:
        x = gamma(x, scale)
        orbit.append(x)
    return orbit


def _check_range(x: int, scale: Scale) -> None:
    if x < 0 or x >= scale.s(scale.depth):
        raise OutOfRange(f"{x} outside [0, {scale.s(scale.depth)})")
