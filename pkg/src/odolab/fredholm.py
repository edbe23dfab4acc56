"""Finite-truncation index pairings and commutator bounds.

A finitely supported integer homomorphism determines a graded model: one
block per unit of each coefficient, with diagonal evaluations at y and
gamma(y) split between the two grading summands by the coefficient sign.
The pairing operator of a projection against the block-exchange map is an
explicit integer matrix whose kernel and cokernel dimensions, computed by
exact rational elimination, give the index.

Blocks at y = 0 realize the plain evaluation at 0 (no carry partner): the
sign decides which grading slot carries the evaluation, the other slot is
dead, and the exchange map annihilates the pair, contributing phi_0 * P(0)
to the index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import NotAProjection, OutOfRange, ScaleTooShallow
from .harmonic import LevelFunction
from .ktheory import evaluate, is_projection
from .lengths import LengthSpec
from .odometer import gamma, n_of
from .scales import Scale


@dataclass(frozen=True)
class BlockLabel:
    """One unit of a coefficient: base point y, copy index j, coefficient sign."""

    y: int
    j: int
    sign: int


@dataclass(frozen=True)
class FredholmModel:
    """The labeled basis of the graded model for a finite coefficient map."""

    scale: Scale
    labels: tuple[BlockLabel, ...]

    def is_zero_block(self, label: BlockLabel) -> bool:
        return label.y == 0

    def odd_point(self, label: BlockLabel) -> int | None:
        """Evaluation point of the odd slot; None marks a dead slot."""
        if label.y == 0:
            return 0 if label.sign > 0 else None
        if label.sign > 0:
            return label.y
        return gamma(label.y, self.scale)

    def ev_point(self, label: BlockLabel) -> int | None:
        """Evaluation point of the even slot; None marks a dead slot."""
        if label.y == 0:
            return 0 if label.sign < 0 else None
        if label.sign > 0:
            return gamma(label.y, self.scale)
        return label.y


def build_module(scale: Scale, phi: Mapping[int, int]) -> FredholmModel:
    """One label per coefficient unit; odd and even slot counts both equal
    the total absolute coefficient mass."""
    top = scale.s(scale.depth)
    labels = []
    for y in sorted(int(k) for k in phi):
        c = int(phi[y])
        if c == 0:
            continue
        if y < 0 or y >= top:
            raise OutOfRange(f"support point {y} outside [0, {top})")
        sign = 1 if c > 0 else -1
        labels.extend(BlockLabel(y, j, sign) for j in range(1, abs(c) + 1))
    return FredholmModel(scale, tuple(labels))


@dataclass(frozen=True)
class IndexResult:
    """Kernel/cokernel data of the compressed exchange operator."""

    index: int
    dim_ker: int
    dim_coker: int
    rank: int
    dim_domain: int
    dim_codomain: int


def pairing_operator(model: FredholmModel, proj: LevelFunction,
                     weights: Mapping[BlockLabel, object] | None = None
                     ) -> IndexResult:
    """Compress the exchange map between the ranges of the projection.

    The domain collects the live odd slots where the projection evaluates
    to 1, the codomain the live even slots likewise; the matrix couples the
    two slots of each non-zero block diagonally (weight 1, or the supplied
    positive diagonal weight, which never changes the index).
    """
    if not is_projection(proj):
        raise NotAProjection("projection values must all be 0 or 1")
    dom = [L for L in model.labels
           if model.odd_point(L) is not None
           and evaluate(proj, model.odd_point(L)) == 1]
    codom = [L for L in model.labels
             if model.ev_point(L) is not None
             and evaluate(proj, model.ev_point(L)) == 1]
    col = {L: i for i, L in enumerate(dom)}
    rows = [[Fraction(0)] * len(dom) for _ in codom]
    for i, L in enumerate(codom):
        if not model.is_zero_block(L) and L in col:
            w = Fraction(1) if weights is None else Fraction(weights[L])
            if w <= 0:
                raise ValueError("diagonal weights must be positive")
            rows[i][col[L]] = w
    rank = _rational_rank(rows, len(dom))
    dim_ker = len(dom) - rank
    dim_coker = len(codom) - rank
    return IndexResult(dim_ker - dim_coker, dim_ker, dim_coker, rank,
                       len(dom), len(codom))


def index_pairing(phi: Mapping[int, int], proj: LevelFunction,
                  spec: LengthSpec | None = None) -> int:
    """Index of the compressed exchange operator; equals the integer pairing.

    With a length spec the exchange map is replaced by the diagonal positive
    operator with the level values, which leaves the index unchanged.
    """
    model = build_module(proj.scale, phi)
    weights = None
    if spec is not None:
        weights = {L: lam for L, lam in dirac_spectrum(phi, spec)}
    return pairing_operator(model, proj, weights).index


def dirac_spectrum(phi: Mapping[int, int],
                   spec: LengthSpec) -> list[tuple[BlockLabel, Fraction]]:
    """Per-label diagonal values l_{n(y)} of the unbounded refinement.

    The value at y = 0 is 1 (the zeroth level value); sorting the returned
    values witnesses discreteness of the truncated spectrum.
    """
    model = build_module(spec.scale, phi)
    return [(L, spec.value_at(n_of(L.y, spec.scale))) for L in model.labels]


def commutator_tail_norm(f: LevelFunction, Y: int, threshold: int) -> float:
    """Largest jump |f(y) - f(gamma(y))| over 1 <= y <= Y with n(y) > threshold.

    Once n(y) exceeds the level of f, y and gamma(y) agree mod the modulus of
    f and the jump vanishes, so only y below s_{level} can contribute; the
    sweep therefore returns exactly 0.0 whenever threshold >= level.
    """
    best = 0.0
    scale = f.scale
    for y in range(1, min(Y, f.modulus - 1) + 1):
        if n_of(y, scale) <= threshold:
            continue
        jump = abs(complex(f(y)) - complex(f(gamma(y, scale))))
        best = max(best, jump)
    return best


def spectral_commutator_bound(f: LevelFunction, spec: LengthSpec, Y: int) -> float:
    """sup over 0 <= y <= Y of l_{n(y)} * |f(y) - f(gamma(y))|.

    The y = 0 term is 0 by convention.  Terms with y >= s_{level(f)} vanish
    identically (y and gamma(y) agree mod s_{level}), so the sweep bound Y
    may exceed the scale depth; the sup is always at most twice the N = 1
    coefficient norm of f.
    """
    if f.level > spec.depth:
        raise ScaleTooShallow(f"function level {f.level} exceeds spec depth "
                              f"{spec.depth}")
    best = 0.0
    scale = f.scale
    for y in range(1, min(Y, f.modulus - 1) + 1):
        lam = float(spec.value_at(n_of(y, scale)))
        jump = abs(complex(f(y)) - complex(f(gamma(y, scale))))
        best = max(best, lam * jump)
    return best


def _rational_rank(rows: list[list[Fraction]], ncols: int) -> int:
    """Rank over the rationals by Gaussian elimination; exact."""
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank
