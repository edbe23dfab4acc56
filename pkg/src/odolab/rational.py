"""Exact rational scalars: parsing, formatting, and complex numbers over Q.

The exact lanes of the library (cohomology prefix sums, integer peeling,
pairings) run on :class:`RationalComplex`, which is closed under the ring
operations, conjugation and division, so no rounding ever enters them.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def parse_rational(value) -> Fraction:
    """Read an exact rational from an int, Fraction, or a "p/q" / "n" string."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(value) -> str:
    """Reduced "p/q" string; integers render without a denominator."""
    return str(Fraction(value))


class RationalComplex:
    """A complex number with Fraction real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "RationalComplex":
        if isinstance(value, RationalComplex):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, Rational):
            return cls(value, 0)
        raise TypeError(f"cannot coerce {value!r} to an exact complex scalar")

    # ring operations ---------------------------------------------------------

    def __add__(self, other):
        other = _as_rc(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rc(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_rc(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_rc(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rc(other)
        if other is NotImplemented:
            return NotImplemented
        denom = other.re * other.re + other.im * other.im
        if denom == 0:
            raise ZeroDivisionError("division by zero")
        return RationalComplex(
            (self.re * other.re + self.im * other.im) / denom,
            (self.im * other.re - self.re * other.im) / denom,
        )

    def __rtruediv__(self, other):
        other = _as_rc(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return RationalComplex(-self.re, -self.im)

    def conjugate(self) -> "RationalComplex":
        return RationalComplex(self.re, -self.im)

    # predicates and conversions ----------------------------------------------

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def abs_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return abs(complex(self))

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, RationalComplex):
            return self.re == other.re and self.im == other.im
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, Rational):
            return self.im == 0 and self.re == other
        if isinstance(other, (complex, float)):
            return complex(self) == complex(other)
        return NotImplemented

    # mutable-looking but used immutably; hashing is disabled on purpose
    __hash__ = None

    def __repr__(self):
        return f"RationalComplex({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}j"
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}j"


def _as_rc(value):
    if isinstance(value, RationalComplex):
        return value
    if isinstance(value, bool):
        return NotImplemented
    if isinstance(value, Rational):
        return RationalComplex(value, 0)
    return NotImplemented


RC_ZERO = RationalComplex(0, 0)
RC_ONE = RationalComplex(1, 0)
