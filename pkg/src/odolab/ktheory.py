"""Integer-valued locally constant functions and their free-basis calculus.

The classes at level n form a free abelian group on the indicators 1_(x) of
the residue classes x mod s_{n(x)}, x = 0, 1, 2, ...; decomposition into
that basis is a triangular peel in increasing x and is exact.  Dual to the
basis are the integer coefficient homomorphisms e_(y); point evaluations
expand over carry orbits as delta_z = e_(z) + e_(gamma(z)) + ... + e_(0),
so pairings reduce to finite integer sums.
"""

from __future__ import annotations

from typing import Mapping

from .errors import NonIntegerValues, OutOfRange
from .harmonic import EXACT, LevelFunction
from .odometer import gamma, gamma_orbit, n_of
from .rational import RationalComplex
from .scales import Scale


def indicator(scale: Scale, n: int, x: int, target_level: int) -> LevelFunction:
    """Characteristic function of {z : z = x mod s_n}, held at target_level."""
    if n < 0 or n > target_level or target_level > scale.depth:
        raise OutOfRange(f"need 0 <= n <= target_level <= depth; "
                         f"got n={n}, target={target_level}")
    s_n = scale.s(n)
    if not 0 <= x < s_n:
        raise OutOfRange(f"residue {x} outside [0, {s_n})")
    size = scale.s(target_level)
    vals = [RationalComplex(1 if (t - x) % s_n == 0 else 0) for t in range(size)]
    return LevelFunction(scale, target_level, vals, EXACT)


def refine_indicator(scale: Scale, n: int, x: int) -> list[tuple[int, int]]:
    """The level-(n+1) pieces whose sum reproduces the level-n indicator."""
    if n + 1 > scale.depth:
        raise OutOfRange(f"no level {n + 1} in a depth-{scale.depth} scale")
    s_n = scale.s(n)
    return [(n + 1, x + l * s_n) for l in range(scale.ratio(n + 1))]


def basis_indicator(scale: Scale, x: int, target_level: int) -> LevelFunction:
    """The free generator 1_(x): the indicator of x mod s_{n(x)}."""
    return indicator(scale, n_of(x, scale), x, target_level)


def class_values(f: LevelFunction) -> list[int]:
    """The values of an integer class as plain ints; NonIntegerValues otherwise."""
    out = []
    for v in f.values:
        if isinstance(v, RationalComplex):
            if not v.is_integer:
                raise NonIntegerValues(f"value {v} is not an integer")
            out.append(int(v.re))
        else:
            if v.imag != 0 or not float(v.real).is_integer():
                raise NonIntegerValues(f"value {v} is not an integer")
            out.append(int(v.real))
    return out


def evaluate(f: LevelFunction, x: int) -> int:
    """Integer value of a class at the residue class of x."""
    vals = class_values(f)
    return vals[x % f.modulus]


def decompose(f: LevelFunction) -> dict[int, int]:
    """Coefficients of a class over the free basis, by the ascending peel.

    The residual after subtracting coefficient * 1_(x) for x = 0, 1, ... is
    identically zero once x reaches s_level - 1, which re-verifies freeness
    on every call.
    """
    scale = f.scale
    residual = class_values(f)
    n = len(residual)
    coeffs: dict[int, int] = {}
    for x in range(n):
        c = residual[x]
        if c == 0:
            continue
        coeffs[x] = c
        s_nx = scale.s(n_of(x, scale))
        for t in range(x, n):
            if (t - x) % s_nx == 0:
                residual[t] -= c
    assert all(v == 0 for v in residual), "peel left a nonzero residual"
    return coeffs


def recompose(scale: Scale, coeffs: Mapping[int, int],
              target_level: int) -> LevelFunction:
    """The integer combination sum coeffs[x] * 1_(x) at the requested level."""
    size = scale.s(target_level)
    vals = [0] * size
    for x, c in coeffs.items():
        x, c = int(x), int(c)
        if not 0 <= x < size:
            raise OutOfRange(f"generator index {x} outside [0, {size})")
        s_nx = scale.s(n_of(x, scale))
        for t in range(x, size):
            if (t - x) % s_nx == 0:
                vals[t] += c
    return LevelFunction(scale, target_level,
                         [RationalComplex(v) for v in vals], EXACT)


def delta_to_e(scale: Scale, z: int) -> dict[int, int]:
    """Point evaluation at z as a basis homomorphism: 1 on the carry orbit."""
    if z < 0 or z >= scale.s(scale.depth):
        raise OutOfRange(f"{z} outside [0, {scale.s(scale.depth)})")
    return {y: 1 for y in gamma_orbit(z, scale)}


def e_to_delta(scale: Scale, z: int) -> tuple[int, int | None]:
    """The dual generator e_(z) as the formal difference delta_z - delta_gamma(z).

    Returns the pair of evaluation points; the second is None for z = 0,
    where e_(0) is the plain evaluation at 0.
    """
    if z < 0 or z >= scale.s(scale.depth):
        raise OutOfRange(f"{z} outside [0, {scale.s(scale.depth)})")
    if z == 0:
        return (0, None)
    return (z, gamma(z, scale))


def pair(phi: Mapping[int, int], f: LevelFunction) -> int:
    """Integer pairing sum phi[y] * coefficient_y(f); always a finite sum."""
    coeffs = decompose(f)
    return sum(int(c) * coeffs.get(int(y), 0) for y, c in phi.items())


def is_projection(f: LevelFunction) -> bool:
    """True when every value is 0 or 1 (idempotent classes)."""
    return all(v == 0 or v == 1 for v in f.values)
