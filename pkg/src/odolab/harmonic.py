"""Locally constant functions and their finite-level Fourier analysis.

A level function holds the s_m values of a function constant on residue
classes mod s_m; evaluation at any integer reads the value of its class.
Two numeric lanes coexist: exact rational-complex values for the algebraic
paths (K-theory, cohomology prefix sums) and binary64 for everything that
goes through Fourier coefficients, where the documented tolerances are
1e-12 for primitive character identities and 1e-9 for derived comparisons.

The weighted coefficient norms sum |fhat_z| * length(z)^N over the finite
subgroup at the function's level; they are submultiplicative, monotone in N,
and dominate the sup norm.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Mapping

import numpy as np

from .dual import DualElement, IDENTITY, enumerate_subgroup, eval_char, level_of
from .errors import (LevelMismatch, LevelOverflow, NotRealValued, OutOfRange,
                     ScaleTooShallow)
from .lengths import LengthSpec, lambda_eval
from .odometer import OdometerPoint
from .rational import RationalComplex
from .scales import Scale

EXACT = "exact"
BINARY64 = "binary64"

_REAL_TOL = 1e-12


class LevelFunction:
    """A function on the odometer determined by its values at one level.

    ``values[x]`` is the value on the residue class of x mod s_level; the
    representation at any finer level replicates the vector periodically.
    Arithmetic promotes both operands to the common (maximum) level; mixing
    an exact operand with a binary64 one demotes the result to binary64.
    """

    __slots__ = ("scale", "level", "values", "mode")

    def __init__(self, scale: Scale, level: int, values, mode: str | None = None):
        if level < 0 or level > scale.depth:
            raise LevelOverflow(f"level {level} outside [0, {scale.depth}]")
        values = list(values)
        if len(values) != scale.s(level):
            raise ValueError(f"expected {scale.s(level)} values at level {level}, "
                             f"got {len(values)}")
        if mode is None:
            mode = EXACT if all(
                isinstance(v, (RationalComplex, Rational)) and not isinstance(v, bool)
                for v in values) else BINARY64
        if mode == EXACT:
            values = tuple(RationalComplex.coerce(v) for v in values)
        elif mode == BINARY64:
            values = tuple(complex(v) for v in values)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        self.scale = scale
        self.level = level
        self.values = values
        self.mode = mode

    # -- constructors -----------------------------------------------------------

    @classmethod
    def constant(cls, scale: Scale, value, level: int = 0) -> "LevelFunction":
        return cls(scale, level, [value] * scale.s(level))

    @classmethod
    def zero(cls, scale: Scale, level: int = 0) -> "LevelFunction":
        return cls.constant(scale, RationalComplex(0), level)

    @classmethod
    def character(cls, scale: Scale, z: DualElement,
                  level: int | None = None) -> "LevelFunction":
        """The character x -> z^x, exact whenever order(z) divides 4."""
        needed = level_of(z, scale)
        level = needed if level is None else level
        if level < needed:
            raise LevelMismatch(
                f"character of order {z.s} is not constant at level {level}")
        n = scale.s(level)
        if z.s in (1, 2, 4):
            table = {0: RationalComplex(1), 1: RationalComplex(0, 1),
                     2: RationalComplex(-1), 3: RationalComplex(0, -1)}
            vals = [table[(z.k * x * (4 // z.s)) % 4] for x in range(n)]
        else:
            vals = [eval_char(z, x) for x in range(n)]
        return cls(scale, level, vals)

    # -- structure ---------------------------------------------------------------

    @property
    def modulus(self) -> int:
        return self.scale.s(self.level)

    def __call__(self, x):
        if isinstance(x, OdometerPoint):
            if x.scale != self.scale or x.level < self.level:
                raise LevelMismatch(
                    f"point at level {x.level} cannot resolve a level "
                    f"{self.level} function")
            x = x.residue
        return self.values[x % self.modulus]

    def promote(self, level: int) -> "LevelFunction":
        if level < self.level:
            raise LevelMismatch(f"cannot demote level {self.level} to {level}")
        if level > self.scale.depth:
            raise LevelOverflow(f"level {level} exceeds scale depth "
                                f"{self.scale.depth}")
        if level == self.level:
            return self
        reps = self.scale.s(level) // self.modulus
        return LevelFunction(self.scale, level, self.values * reps, self.mode)

    def to_binary64(self) -> "LevelFunction":
        if self.mode == BINARY64:
            return self
        return LevelFunction(self.scale, self.level,
                             [complex(v) for v in self.values], BINARY64)

    def real_values(self) -> list:
        """The real parts, raising NotRealValued on any imaginary content.

        Exact functions are checked exactly; binary64 tolerates |im| <= 1e-12.
        """
        if self.mode == EXACT:
            if any(not v.is_real for v in self.values):
                raise NotRealValued("function has nonzero imaginary part")
            return [v.re for v in self.values]
        if any(abs(v.imag) > _REAL_TOL for v in self.values):
            raise NotRealValued("function has nonzero imaginary part")
        return [v.real for v in self.values]

    # -- pointwise algebra ---------------------------------------------------------

    def _binary(self, other, op):
        if not isinstance(other, LevelFunction):
            other = _scalar_function(self.scale, self.level, other)
            if other is None:
                return NotImplemented
        if other.scale != self.scale:
            raise LevelMismatch("operands live on different scales")
        level = max(self.level, other.level)
        a, b = self.promote(level), other.promote(level)
        if a.mode != b.mode:
            a, b = a.to_binary64(), b.to_binary64()
        vals = [op(x, y) for x, y in zip(a.values, b.values)]
        return LevelFunction(self.scale, level, vals, a.mode)

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        return self._binary(other, lambda x, y: x * y)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, LevelFunction):
            return NotImplemented
        return self._binary(scalar, lambda x, y: x / y)

    def __neg__(self):
        return LevelFunction(self.scale, self.level,
                             [-v for v in self.values], self.mode)

    def conj(self) -> "LevelFunction":
        return LevelFunction(self.scale, self.level,
                             [v.conjugate() for v in self.values], self.mode)

    def __eq__(self, other):
        if not isinstance(other, LevelFunction):
            return NotImplemented
        if self.scale != other.scale or self.mode != other.mode:
            return False
        level = max(self.level, other.level)
        return self.promote(level).values == other.promote(level).values

    def __repr__(self):
        return (f"LevelFunction(level={self.level}, mode={self.mode}, "
                f"values={[str(v) for v in self.values]})")


def _scalar_function(scale, level, value):
    if isinstance(value, bool):
        return None
    if isinstance(value, (RationalComplex, Rational)):
        return LevelFunction.constant(scale, value, level)
    if isinstance(value, (int, float, complex)):
        return LevelFunction.constant(scale, complex(value), level)
    return None


class FourierCoeffs:
    """Coefficients over the canonical enumeration of the level subgroup."""

    __slots__ = ("scale", "level", "_coeffs")

    def __init__(self, scale: Scale, level: int,
                 coeffs: Mapping[DualElement, complex]):
        domain = enumerate_subgroup(scale, level)
        extra = set(coeffs) - set(domain)
        if extra:
            raise ValueError(f"coefficients outside the level-{level} subgroup: "
                             f"{sorted(extra, key=lambda z: (z.s, z.k))}")
        self.scale = scale
        self.level = level
        self._coeffs = {z: complex(coeffs.get(z, 0)) for z in domain}

    def __getitem__(self, z: DualElement) -> complex:
        return self._coeffs[z]

    def items(self) -> list[tuple[DualElement, complex]]:
        return list(self._coeffs.items())

    def vector(self) -> np.ndarray:
        return np.array(list(self._coeffs.values()), dtype=complex)

    def filter(self, keep) -> "FourierCoeffs":
        """Zero out every coefficient whose element fails the predicate."""
        return FourierCoeffs(self.scale, self.level,
                             {z: c for z, c in self._coeffs.items() if keep(z)})

    def __len__(self):
        return len(self._coeffs)


@lru_cache(maxsize=None)
def _char_matrix(n: int) -> np.ndarray:
    from .dual import _subgroup_of_order
    elems = _subgroup_of_order(n)
    return np.array([[eval_char(z, x) for x in range(n)] for z in elems],
                    dtype=complex)


def fourier(f: LevelFunction) -> FourierCoeffs:
    """Coefficients fhat_z = (1/s_m) sum_x f(x) conj(z^x) at the function level."""
    n = f.modulus
    v = np.array([complex(x) for x in f.values], dtype=complex)
    coeffs = _char_matrix(n).conjugate() @ v / n
    elems = enumerate_subgroup(f.scale, f.level)
    return FourierCoeffs(f.scale, f.level, dict(zip(elems, coeffs.tolist())))


def inverse_fourier(c: FourierCoeffs) -> LevelFunction:
    """Reassemble sum_z c_z z^x as a binary64 function at the coefficient level."""
    vals = c.vector() @ _char_matrix(c.scale.s(c.level))
    return LevelFunction(c.scale, c.level, vals.tolist(), BINARY64)


def haar_integral(f: LevelFunction):
    """Mean of the level values: the normalized counting measure integral."""
    if f.mode == EXACT:
        total = RationalComplex(0)
        for v in f.values:
            total = total + v
        return total / f.modulus
    return complex(np.mean(np.array([complex(v) for v in f.values], dtype=complex)))


def sup_norm(f: LevelFunction) -> float:
    return max((abs(complex(v)) for v in f.values), default=0.0)


def sup_distance(f: LevelFunction, g: LevelFunction) -> float:
    return sup_norm(f - g)


def _check_spec_covers(f: LevelFunction, spec: LengthSpec) -> None:
    if f.level > spec.depth:
        raise ScaleTooShallow(f"function level {f.level} exceeds spec depth "
                              f"{spec.depth}")
    if spec.scale.entries[:f.level] != f.scale.entries[:f.level]:
        raise ValueError("length spec and function scales disagree")


def rd_norm(f: LevelFunction, N: int, spec: LengthSpec) -> float:
    """The weighted coefficient norm sum |fhat_z| * length(z)^N."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    _check_spec_covers(f, spec)
    total = 0.0
    for z, c in fourier(f).items():
        total += abs(c) * float(lambda_eval(spec, z) ** N)
    return total


def split_at(f: LevelFunction, spec: LengthSpec, m: int) -> tuple[LevelFunction,
                                                                  LevelFunction]:
    """Split into the part with coefficients in the level-m subgroup and the tail.

    The low part has Fourier support where length <= l_m (equivalently where
    the order divides s_m); low + high reassembles f up to binary64 error.
    """
    _check_spec_covers(f, spec)
    if m < 0 or m > spec.depth:
        raise OutOfRange(f"split level {m} outside [0, {spec.depth}]")
    s_m = spec.scale.s(m)
    coeffs = fourier(f)
    low = coeffs.filter(lambda z: s_m % z.s == 0)
    high = coeffs.filter(lambda z: s_m % z.s != 0)
    return inverse_fourier(low), inverse_fourier(high)


def exp_i(f: LevelFunction, n: int) -> LevelFunction:
    """Pointwise exp(i n f(x)) of a real-valued function; unimodular binary64."""
    reals = f.real_values()
    vals = [cmath.exp(1j * n * float(t)) for t in reals]
    return LevelFunction(f.scale, f.level, vals, BINARY64)


def functional_calculus(a: LevelFunction, series: Mapping[int, complex],
                        period, n_max: int | None = None) -> LevelFunction:
    """Evaluate a periodic Fourier series on a real-valued function.

    Computes sum over |n| <= n_max of series[n] * exp(2 pi i n a(x) / period)
    pointwise; with a finitely supported series this is the smooth calculus
    applied to the locally constant element a.
    """
    reals = [float(t) for t in a.real_values()]
    L = float(period)
    if L == 0:
        raise ValueError("period must be nonzero")
    terms = [(n, complex(c)) for n, c in sorted(series.items())
             if n_max is None or abs(n) <= n_max]
    vals = [sum((c * cmath.exp(2j * math.pi * n * t / L) for n, c in terms),
                start=0j) for t in reals]
    return LevelFunction(a.scale, a.level, vals, BINARY64)
