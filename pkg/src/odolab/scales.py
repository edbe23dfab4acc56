"""Supernatural numbers and scales.

A scale is a finite prefix (s_1, ..., s_M) of a divisibility chain with
s_0 = 1 implicit; it fixes the truncation depth of every computation in the
library.  Supernatural numbers are fully factored formal products of primes
with exponents in {1, 2, ..., inf}; they carry the usual divisibility
theory (gcd, lcm, multiplication) and classify odometer groups.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Mapping

from .errors import BadFirstEntry, DivisibilityViolation, NotIncreasing, OutOfRange

INF = math.inf

_LITERAL_FACTOR = re.compile(r"^(\d+)(?:\^(\d+|inf))?$")


def is_prime(n: int) -> bool:
    """Trial division; desk scale only."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class SupernaturalNumber:
    """Formal product of primes with exponents in {1, 2, ...} or infinity.

    ``finite_exponents`` maps primes to positive integer exponents and
    ``infinite_primes`` lists the primes with exponent infinity; the two are
    disjoint.  Values are immutable after construction.
    """

    __slots__ = ("finite_exponents", "infinite_primes")

    def __init__(self, finite_exponents: Mapping[int, int] | None = None,
                 infinite_primes: Iterable[int] = ()):
        fin: dict[int, int] = {}
        for p, e in dict(finite_exponents or {}).items():
            p, e = int(p), int(e)
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            fin[p] = e
        inf = frozenset(int(p) for p in infinite_primes)
        for p in inf:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        if inf & fin.keys():
            raise ValueError("finite and infinite exponent sets overlap")
        self.finite_exponents = dict(sorted(fin.items()))
        self.infinite_primes = inf

    @classmethod
    def from_int(cls, n: int) -> "SupernaturalNumber":
        return cls(factorize(int(n)))

    @classmethod
    def one(cls) -> "SupernaturalNumber":
        return cls()

    @classmethod
    def parse(cls, text: str) -> "SupernaturalNumber":
        """Parse a literal like ``"2^inf*3*5^2"``; ``"1"`` is the identity."""
        text = text.strip().replace(" ", "")
        if text in ("", "1"):
            return cls()
        fin: dict[int, int] = {}
        inf: set[int] = set()
        for token in text.split("*"):
            m = _LITERAL_FACTOR.match(token)
            if m is None:
                raise ValueError(f"bad supernatural literal factor: {token!r}")
            base = int(m.group(1))
            exp = m.group(2)
            for p, e in factorize(base).items():
                if exp == "inf":
                    inf.add(p)
                else:
                    fin[p] = fin.get(p, 0) + e * (1 if exp is None else int(exp))
        fin = {p: e for p, e in fin.items() if p not in inf}
        return cls(fin, inf)

    # -- structure ------------------------------------------------------------

    def exponent(self, p: int):
        """Exponent of a prime: 0, a positive int, or math.inf."""
        if p in self.infinite_primes:
            return INF
        return self.finite_exponents.get(p, 0)

    def primes(self) -> list[int]:
        return sorted(set(self.finite_exponents) | self.infinite_primes)

    @property
    def is_finite(self) -> bool:
        return not self.infinite_primes

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError("infinite supernatural number has no integer value")
        return math.prod(p ** e for p, e in self.finite_exponents.items())

    # -- divisibility theory ----------------------------------------------------

    def divides(self, other: "SupernaturalNumber") -> bool:
        return all(self.exponent(p) <= other.exponent(p) for p in self.primes())

    def lcm(self, other: "SupernaturalNumber") -> "SupernaturalNumber":
        return combine(self, other, "lcm")

    def gcd(self, other: "SupernaturalNumber") -> "SupernaturalNumber":
        return combine(self, other, "gcd")

    def __mul__(self, other):
        if not isinstance(other, SupernaturalNumber):
            return NotImplemented
        return combine(self, other, "mul")

    def __eq__(self, other):
        if not isinstance(other, SupernaturalNumber):
            return NotImplemented
        return (self.finite_exponents == other.finite_exponents
                and self.infinite_primes == other.infinite_primes)

    def __hash__(self):
        return hash((tuple(self.finite_exponents.items()), self.infinite_primes))

    def __str__(self):
        if not self.primes():
            return "1"
        parts = []
        for p in self.primes():
            e = self.exponent(p)
            if e == 1:
                parts.append(str(p))
            elif e == INF:
                parts.append(f"{p}^inf")
            else:
                parts.append(f"{p}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return f"SupernaturalNumber.parse({str(self)!r})"


def combine(a: SupernaturalNumber, b: SupernaturalNumber,
            mode: str) -> SupernaturalNumber:
    """Exponent-wise max (lcm), min (gcd), or sum (mul).

    Infinity absorbs max and sum and is dominated by any finite value in min.
    """
    if mode not in ("lcm", "gcd", "mul"):
        raise ValueError(f"unknown combine mode: {mode!r}")
    ops = {"lcm": max, "gcd": min, "mul": lambda x, y: x + y}
    op = ops[mode]
    fin: dict[int, int] = {}
    inf: set[int] = set()
    for p in sorted(set(a.primes()) | set(b.primes())):
        e = op(a.exponent(p), b.exponent(p))
        if e == INF:
            inf.add(p)
        elif e >= 1:
            fin[p] = int(e)
    return SupernaturalNumber(fin, inf)


def divides(a: SupernaturalNumber, b: SupernaturalNumber) -> bool:
    return a.divides(b)


class Scale:
    """Finite prefix (s_1, ..., s_M) of a divisibility chain; s_0 = 1.

    Requires s_1 >= 2 and s_m | s_{m+1} with s_m < s_{m+1}.  An empty scale
    (depth 0) is the degenerate prefix covering only the trivial group.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[int] = ()):
        entries = tuple(int(e) for e in entries)
        if entries:
            if entries[0] < 2:
                raise BadFirstEntry(f"s_1 = {entries[0]} < 2")
            for prev, nxt in zip(entries, entries[1:]):
                if nxt <= prev:
                    raise NotIncreasing(f"{prev} >= {nxt}")
                if nxt % prev != 0:
                    raise DivisibilityViolation(f"{prev} does not divide {nxt}")
        self.entries = entries

    @property
    def depth(self) -> int:
        return len(self.entries)

    def s(self, m: int) -> int:
        """The m-th modulus, with s(0) = 1."""
        if m < 0 or m > self.depth:
            raise OutOfRange(f"level {m} outside [0, {self.depth}]")
        return 1 if m == 0 else self.entries[m - 1]

    def ratio(self, m: int) -> int:
        """s_m / s_{m-1} for 1 <= m <= depth."""
        return self.s(m) // self.s(m - 1)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Scale):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Scale({list(self.entries)!r})"


def validate_scale(entries: Iterable[int]) -> Scale:
    """Check the divisibility chain and strict monotonicity of a nonempty list."""
    entries = list(entries)
    if not entries:
        raise ValueError("scale must be a nonempty list")
    return Scale(entries)


def scale_lcm(scale: Scale) -> SupernaturalNumber:
    """lcm of the prefix entries; a lower bound for the full classifying number."""
    acc = SupernaturalNumber.one()
    for entry in scale.entries:
        acc = acc.lcm(SupernaturalNumber.from_int(entry))
    return acc
