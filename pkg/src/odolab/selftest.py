"""Bundled invariant suites and the random input generators behind them.

The self-test exercises the load-bearing cross-checks on the built-in
scales with fixed seeds: norm submultiplicativity, the coboundary round
trip in both solver methods, matrix index against the integer pairing, and
the length-classification round trip, plus a deliberately corrupted length
table whose violation must be caught with a witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .cohomology import apply_coboundary, solve_coboundary
from .dual import make_root
from .fredholm import index_pairing
from .harmonic import LevelFunction, haar_integral, rd_norm, sup_distance
from .ktheory import pair
from .lengths import LengthSpec, LengthTable, classify, lambda_table, verify_axioms
from .presets import dyadic_spec, mixed_spec
from .rational import RationalComplex
from .scales import Scale


# -- deterministic random inputs -------------------------------------------------

def random_rational(rng: random.Random, span: int = 8,
                    max_denominator: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_denominator))


def random_rational_function(scale: Scale, level: int, rng: random.Random,
                             mean_zero: bool = False, real: bool = False,
                             span: int = 8) -> LevelFunction:
    """Exact function with random rational values; optionally recentered."""
    size = scale.s(level)
    vals = [RationalComplex(random_rational(rng, span),
                            0 if real else random_rational(rng, span))
            for _ in range(size)]
    f = LevelFunction(scale, level, vals)
    if mean_zero:
        f = f - LevelFunction.constant(scale, haar_integral(f), level)
    return f


def random_projection(scale: Scale, level: int, rng: random.Random) -> LevelFunction:
    vals = [RationalComplex(rng.randint(0, 1)) for _ in range(scale.s(level))]
    return LevelFunction(scale, level, vals)


def random_homomorphism(scale: Scale, rng: random.Random, max_support: int = 16,
                        coeff_span: int = 3) -> dict[int, int]:
    top = min(max_support, scale.s(scale.depth))
    support = rng.sample(range(top), k=rng.randint(1, min(5, top)))
    phi = {y: rng.randint(-coeff_span, coeff_span) for y in support}
    return {y: c for y, c in phi.items() if c != 0}


def random_length_spec(rng: random.Random, max_depth: int = 5,
                       max_top: int = 64) -> LengthSpec:
    entries = []
    current = rng.choice([2, 3, 4, 5])
    depth = rng.randint(1, max_depth)
    while len(entries) < depth and current <= max_top:
        entries.append(current)
        current *= rng.choice([2, 3, 4, 5])
    values = []
    running = Fraction(1)
    for _ in entries:
        running += Fraction(rng.randint(1, 9), rng.randint(1, 4))
        values.append(running)
    return LengthSpec(Scale(entries), tuple(values))


# -- suites ----------------------------------------------------------------------

@dataclass
class SuiteResult:
    name: str
    passed: int
    failed: int
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _suite_submultiplicativity(rng, tol) -> SuiteResult:
    result = SuiteResult("submultiplicativity", 0, 0)
    for spec in (dyadic_spec(4), mixed_spec(3)):
        for _ in range(20):
            level = rng.randint(1, spec.depth)
            f = random_rational_function(spec.scale, level, rng, span=4)
            g = random_rational_function(spec.scale, level, rng, span=4)
            for N in range(3):
                lhs = rd_norm(f * g, N, spec)
                rhs = rd_norm(f, N, spec) * rd_norm(g, N, spec)
                if lhs <= rhs + tol:
                    result.passed += 1
                else:
                    result.failed += 1
                    result.notes.append(f"N={N}: {lhs} > {rhs}")
    return result


def _suite_coboundary(rng, tol) -> SuiteResult:
    result = SuiteResult("coboundary-round-trip", 0, 0)
    for spec in (dyadic_spec(4), mixed_spec(3)):
        for _ in range(20):
            level = rng.randint(1, spec.depth)
            f = random_rational_function(spec.scale, level, rng, mean_zero=True)
            g = solve_coboundary(f, "prefix_sum")
            exact = apply_coboundary(g) == f
            close = sup_distance(solve_coboundary(f, "fourier").to_binary64(),
                                 g.to_binary64()) <= tol
            if exact and close:
                result.passed += 1
            else:
                result.failed += 1
                result.notes.append(f"level={level} exact={exact} close={close}")
    return result


def _suite_index(rng, _tol) -> SuiteResult:
    result = SuiteResult("index-vs-pairing", 0, 0)
    for spec in (dyadic_spec(4), mixed_spec(4)):
        for _ in range(20):
            phi = random_homomorphism(spec.scale, rng)
            proj = random_projection(spec.scale, rng.randint(0, spec.depth), rng)
            if index_pairing(phi, proj) == pair(phi, proj):
                result.passed += 1
            else:
                result.failed += 1
                result.notes.append(f"phi={phi}")
    return result


def _suite_classification(rng, _tol) -> SuiteResult:
    result = SuiteResult("classification-round-trip", 0, 0)
    for _ in range(20):
        spec = random_length_spec(rng)
        if classify(lambda_table(spec)) == spec:
            result.passed += 1
        else:
            result.failed += 1
            result.notes.append(f"spec={spec}")
    return result


def _suite_axiom_witness(_rng, _tol) -> SuiteResult:
    # order-4 elements shorter than the order-2 one: i*i escapes the sublevel set
    corrupted = LengthTable({
        make_root(0, 1): 1,
        make_root(1, 2): 4,
        make_root(1, 4): 2,
        make_root(3, 4): 2,
    })
    report = verify_axioms(corrupted)
    caught = not report.non_archimedean and "non_archimedean" in report.witnesses
    result = SuiteResult("axiom-witness", int(caught), int(not caught))
    if caught:
        z1, z2, value, cap = report.witnesses["non_archimedean"]
        result.notes.append(f"witness: {z1} * {z2} -> {value} > {cap}")
    return result


def run_selftest(seed: int = 0, tol: float = 1e-9) -> list[SuiteResult]:
    rng = random.Random(seed)
    suites = (_suite_submultiplicativity, _suite_coboundary, _suite_index,
              _suite_classification, _suite_axiom_witness)
    return [suite(rng, tol) for suite in suites]
