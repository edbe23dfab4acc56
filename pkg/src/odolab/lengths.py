"""Non-archimedean length functions on the dual group.

A length assignment is determined by a scale (s_1, ..., s_M) together with a
strictly increasing list of rational values (l_1, ..., l_M), l_0 = 1: every
z whose minimal level is m gets length l_m.  This module evaluates such
specifications, checks the defining axioms of arbitrary finite tables,
recovers the (s, l) data from a valid table, and certifies polynomial
growth via exact rational comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .dual import DualElement, IDENTITY, enumerate_subgroup, scale_form
from .errors import AxiomViolation, DomainNotSubgroup, SublevelNotSubgroup
from .rational import parse_rational
from .scales import Scale, factorize


@dataclass(frozen=True)
class LengthSpec:
    """Scale plus level values: the data (s, l) of a length function."""

    scale: Scale
    l: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(parse_rational(v) for v in self.l)
        object.__setattr__(self, "l", values)
        if len(values) != self.scale.depth:
            raise ValueError("need exactly one length value per scale entry")
        previous = Fraction(1)
        for v in values:
            if v <= previous:
                raise ValueError(f"length values must increase strictly above 1; "
                                 f"got {v} after {previous}")
            previous = v

    @property
    def depth(self) -> int:
        return self.scale.depth

    def value_at(self, m: int) -> Fraction:
        """l_m, with l_0 = 1."""
        return Fraction(1) if m == 0 else self.l[m - 1]


def lambda_eval(spec: LengthSpec, z: DualElement) -> Fraction:
    """Length of a root of unity: l_m for the minimal level m containing z."""
    m, _ = scale_form(z, spec.scale)
    return spec.value_at(m)


class LengthTable:
    """A finite table z -> value on (what should be) a subgroup of the dual."""

    def __init__(self, mapping: Mapping[DualElement, object]):
        self._table = {z: parse_rational(v) for z, v in mapping.items()}

    def domain(self) -> list[DualElement]:
        return sorted(self._table, key=lambda z: (z.s, z.k))

    def value(self, z: DualElement) -> Fraction:
        return self._table[z]

    def items(self):
        return [(z, self._table[z]) for z in self.domain()]

    def __len__(self):
        return len(self._table)

    def __contains__(self, z):
        return z in self._table


def lambda_table(spec: LengthSpec, depth: int | None = None) -> LengthTable:
    """Materialize the length values on the subgroup at a given level."""
    depth = spec.depth if depth is None else depth
    return LengthTable({z: lambda_eval(spec, z)
                        for z in enumerate_subgroup(spec.scale, depth)})


@dataclass
class AxiomReport:
    """Outcome of the three table checks, with one witness per failure."""

    normalization: bool
    non_archimedean: bool
    order_class_constancy: bool
    witnesses: dict

    def all_pass(self) -> bool:
        return self.normalization and self.non_archimedean and self.order_class_constancy


def verify_axioms(table: LengthTable) -> AxiomReport:
    """Exhaustively check a finite table against the length-function axioms.

    The domain must be a finite subgroup (identity, inverses, products all
    present), otherwise DomainNotSubgroup is raised.  The checks themselves
    are reported rather than raised, with the first violating witness each.
    """
    domain = table.domain()
    members = set(domain)
    if IDENTITY not in members:
        raise DomainNotSubgroup("table does not contain the identity")
    for z in domain:
        if z.inverse() not in members:
            raise DomainNotSubgroup(f"inverse of {z} missing from table")
    for z1 in domain:
        for z2 in domain:
            if z1 * z2 not in members:
                raise DomainNotSubgroup(f"product {z1}*{z2} missing from table")

    witnesses: dict = {}

    normalization = True
    for z in domain:
        v = table.value(z)
        violates = v < 1 or (v == 1) != z.is_identity
        if violates:
            normalization = False
            witnesses["normalization"] = (z, v)
            break

    non_archimedean = True
    for z1 in domain:
        for z2 in domain:
            v = table.value(z1 * z2)
            cap = max(table.value(z1), table.value(z2))
            if v > cap:
                non_archimedean = False
                witnesses["non_archimedean"] = (z1, z2, v, cap)
                break
        if not non_archimedean:
            break

    order_class_constancy = True
    by_order: dict[int, DualElement] = {}
    for z in domain:
        first = by_order.setdefault(z.s, z)
        if table.value(z) != table.value(first):
            order_class_constancy = False
            witnesses["order_class_constancy"] = (first, z)
            break

    return AxiomReport(normalization, non_archimedean, order_class_constancy,
                       witnesses)


def classify(table: LengthTable) -> LengthSpec:
    """Recover the (s, l) prefix whose length function reproduces the table.

    The scale entries are the cardinalities of the sublevel sets, which are
    subgroups whenever the axioms hold; the l values are the distinct table
    values above 1.  The trivial table {1 -> 1} yields the empty prefix.
    """
    report = verify_axioms(table)
    if not report.all_pass():
        raise AxiomViolation(f"table violates axioms: {report.witnesses}", report)
    levels = sorted({v for _, v in table.items() if v > 1})
    entries = []
    for lm in levels:
        sublevel = [z for z, v in table.items() if v <= lm]
        _check_subgroup(sublevel, lm)
        entries.append(len(sublevel))
    spec = LengthSpec(Scale(entries), tuple(levels))
    for z, v in table.items():
        if lambda_eval(spec, z) != v:  # cannot happen once the axioms hold
            raise SublevelNotSubgroup(f"classification failed to reproduce {z}")
    return spec


def _check_subgroup(elements: list[DualElement], level_value) -> None:
    members = set(elements)
    for z1 in elements:
        for z2 in elements:
            if z1 * z2 not in members:
                raise SublevelNotSubgroup(
                    f"sublevel set at {level_value} is not closed under product")


@dataclass(frozen=True)
class GrowthParams:
    """Certified polynomial-growth parameters: length >= c * order^alpha."""

    c: Fraction
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", parse_rational(self.c))
        object.__setattr__(self, "alpha", parse_rational(self.alpha))
        if self.c <= 0 or self.alpha <= 0:
            raise ValueError("growth parameters must be positive")

    @property
    def beta(self) -> Fraction:
        return 2 / self.alpha


@dataclass(frozen=True)
class GrowthCertificate:
    holds: bool
    witness: DualElement | None

    def __bool__(self):
        return self.holds


def growth_certificate(spec: LengthSpec, params: GrowthParams,
                       depth: int | None = None) -> GrowthCertificate:
    """Check length(z) >= c * order(z)^alpha over the whole truncated dual.

    Comparisons are exact: with alpha = p/q the inequality is equivalent to
    length^q >= c^q * order^p over the rationals.
    """
    depth = spec.depth if depth is None else depth
    p, q = params.alpha.numerator, params.alpha.denominator
    cq = params.c ** q
    for z in enumerate_subgroup(spec.scale, depth):
        if lambda_eval(spec, z) ** q < cq * Fraction(z.s) ** p:
            return GrowthCertificate(False, z)
    return GrowthCertificate(True, None)


def d_of_r(spec: LengthSpec, r) -> int:
    """Cardinality of the sublevel set {z : length(z) <= r} in the truncation."""
    r = parse_rational(r)
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    m = 0
    while m < spec.depth and spec.value_at(m + 1) <= r:
        m += 1
    return spec.scale.s(m)


def totient(n: int) -> int:
    """Euler's phi via trial-division factorization."""
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def totient_sum_bound(params: GrowthParams, r) -> int:
    """Sum of totient(k) over all k with c * k^alpha <= r.

    Whenever the growth certificate holds, this sum dominates d_of_r(spec, r):
    each admissible order contributes at most totient(k) roots of unity.
    """
    r = parse_rational(r)
    p, q = params.alpha.numerator, params.alpha.denominator
    cq, rq = params.c ** q, r ** q
    total, k = 0, 1
    while cq * Fraction(k) ** p <= rq:
        total += totient(k)
        k += 1
    return total


def count_bound_holds(spec: LengthSpec, C, beta) -> bool:
    """Certify d(r) <= C * r^beta for all r >= 1, via the jump points r = l_m.

    d is a right-continuous step function jumping exactly at the l_m, and
    C * r^beta is increasing, so checking r = 1 and r = l_m suffices.
    """
    C, beta = parse_rational(C), parse_rational(beta)
    p, q = beta.numerator, beta.denominator
    cq = C ** q
    for m in range(spec.depth + 1):
        if Fraction(spec.scale.s(m)) ** q > cq * spec.value_at(m) ** p:
            return False
    return True
