"""Built-in scales and length specifications.

Two families cover the test surface: the dyadic chain 2, 4, 8, ... with
level values 2^m, and a mixed chain 3, 6, 12, ... (doubling after the
initial 3) with level values equal to the moduli.  Both satisfy the growth
inequality length >= order with c = 1, alpha = 1.
"""

from __future__ import annotations

from fractions import Fraction

from .lengths import GrowthParams, LengthSpec
from .scales import Scale


def dyadic_scale(depth: int) -> Scale:
    return Scale([2 ** m for m in range(1, depth + 1)])


def dyadic_spec(depth: int) -> LengthSpec:
    scale = dyadic_scale(depth)
    return LengthSpec(scale, tuple(Fraction(e) for e in scale.entries))


def mixed_scale(depth: int) -> Scale:
    return Scale([3 * 2 ** m for m in range(depth)])


def mixed_spec(depth: int) -> LengthSpec:
    scale = mixed_scale(depth)
    return LengthSpec(scale, tuple(Fraction(e) for e in scale.entries))


UNIT_GROWTH = GrowthParams(Fraction(1), Fraction(1))
