"""The cohomological equation g(x+1) - g(x) = f(x) for the odometer shift.

A mean-zero f at any level admits a solution at the same level.  The
reference solver accumulates prefix sums and recenters, which is exact on
rational data; the coefficient-division solver divides each Fourier
coefficient by (z - 1) and exists to cross-check the first, since those
divisions live in binary64.  Both return the mean-zero representative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dual import IDENTITY, eval_char
from .errors import NonzeroMean
from .harmonic import (BINARY64, EXACT, FourierCoeffs, LevelFunction, fourier,
                       haar_integral, inverse_fourier)
from .odometer import OdometerPoint
from .rational import RationalComplex

DEFAULT_TOLERANCE = 1e-9


def solve_coboundary(f: LevelFunction, method: str = "prefix_sum",
                     tol: float = DEFAULT_TOLERANCE) -> LevelFunction:
    """Solve g(x+1) - g(x) = f(x) with mean-zero normalization of g.

    Requires mean(f) = 0: exactly in exact mode, within tol in binary64.
    """
    if method not in ("prefix_sum", "fourier"):
        raise ValueError(f"unknown method {method!r}")
    mean = haar_integral(f)
    if f.mode == EXACT:
        if mean != 0:
            raise NonzeroMean(f"mean {mean} is not zero")
    elif abs(complex(mean)) > tol:
        raise NonzeroMean(f"|mean| = {abs(complex(mean))} exceeds {tol}")

    if method == "prefix_sum":
        running = RationalComplex(0) if f.mode == EXACT else 0j
        prefix = []
        for v in f.values:
            prefix.append(running)
            running = running + v
        center = sum(prefix[1:], start=prefix[0]) / f.modulus
        return LevelFunction(f.scale, f.level, [p - center for p in prefix], f.mode)

    coeffs = fourier(f)
    solved = {z: (0j if z == IDENTITY else c / (eval_char(z, 1) - 1))
              for z, c in coeffs.items()}
    return inverse_fourier(FourierCoeffs(f.scale, f.level, solved))


def apply_coboundary(g: LevelFunction) -> LevelFunction:
    """The difference g(x+1) - g(x); always has exact mean zero."""
    n = g.modulus
    vals = [g.values[(x + 1) % n] - g.values[x] for x in range(n)]
    return LevelFunction(g.scale, g.level, vals, g.mode)


@dataclass(frozen=True)
class Cocycle:
    """A cocycle over the shift, determined by its one-step generator r."""

    generator: LevelFunction


def cocycle_eval(c: Cocycle, k: int, x: OdometerPoint):
    """The k-step sum r(x) + r(x+1) + ... + r(x+k-1); zero for k = 0.

    Satisfies the composition identity: the (k+l)-step sum at x equals the
    k-step sum at x plus the l-step sum at x+k.
    """
    if k < 0:
        raise ValueError("step count must be nonnegative")
    r = c.generator
    acc = RationalComplex(0) if r.mode == EXACT else 0j
    point = x
    for _ in range(k):
        acc = acc + r(point)
        point = point + 1
    return acc


def skew_step(c: Cocycle, state):
    """One step of the skew product: (x, v) -> (x+1, v + r(x))."""
    x, v = state
    return (x + 1, v + c.generator(x))


def cohomology_class(f: LevelFunction):
    """The mean of f: the complete obstruction to being a coboundary."""
    return haar_integral(f)
