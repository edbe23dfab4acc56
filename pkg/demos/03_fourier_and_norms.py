"""Fourier analysis at a finite level and the weighted coefficient norms.

Functions constant on residue classes mod s_m have finite Fourier series
over the order-s_m subgroup.  The N-norms weight each coefficient by
length^N; they are submultiplicative and the norms of exponentials e^{inf}
grow only polynomially in n, the analytic heart of the library.
"""

import math
import random
from fractions import Fraction

from odolab import (LevelFunction, dual, exp_i, fourier, haar_integral,
                    inverse_fourier, rd_norm, split_at, sup_distance, sup_norm)
from odolab.presets import dyadic_spec
from odolab.selftest import random_rational_function

spec = dyadic_spec(4)
scale = spec.scale

f = LevelFunction(scale, 2, [3, -1, -1, -1])
print("f =", [str(v) for v in f.values], " mean =", haar_integral(f))
print("coefficients (canonical order):")
for z, c in fourier(f).items():
    print(f"  {str(z):12s} {c:.3f}")
print("inversion defect:", sup_distance(inverse_fourier(fourier(f)),
                                        f.to_binary64()))

# norms: each coefficient weighted by length(z)^N
for N in range(4):
    print(f"|f|_{N} = {rd_norm(f, N, spec):.6f}")
print("sup norm", sup_norm(f), "<= |f|_0", rd_norm(f, 0, spec))

# splitting at level m separates short and long characters
chi2 = LevelFunction.character(scale, dual.make_root(1, 2), 2)
chi4 = LevelFunction.character(scale, dual.make_root(1, 4), 2)
g = 2 + Fraction(1, 2) * chi2 + 3 * chi4
low, high = split_at(g, spec, 1)
print("\nsplit at level 1: low ~", [f"{v:.1f}" for v in low.values],
      " high ~", [f"{v:.1f}" for v in high.values])

# submultiplicativity on random data
rng = random.Random(0)
a = random_rational_function(scale, 3, rng, span=3)
b = random_rational_function(scale, 3, rng, span=3)
print("\nsubmultiplicativity |ab|_2 <= |a|_2 |b|_2:",
      rd_norm(a * b, 2, spec) <= rd_norm(a, 2, spec) * rd_norm(b, 2, spec) + 1e-9)

# polynomially bounded exponentials: |e^{inf}|_N <= e^{|f|_{N+1}} n^{N+2}
h = random_rational_function(scale, 2, rng, real=True, span=1)
print("\nexponential norm growth for a random real h, N = 1:")
bound_base = math.exp(rd_norm(h, 2, spec))
for n in (1, 2, 4, 16, 64):
    lhs = rd_norm(exp_i(h, n), 1, spec)
    print(f"  n={n:3d}  |e^(inh)|_1 = {lhs:10.3f}  <=  {bound_base * n ** 3:12.3f}")
