"""Solving g(x+1) - g(x) = f(x) over the odometer shift.

A solution exists exactly when f has mean zero, and the mean is then the
complete invariant: the first cohomology of the shift is one complex line.
The prefix-sum solver is exact on rationals; the coefficient-division
solver cross-checks it in binary64.
"""

import random

from odolab import (Cocycle, LevelFunction, OdometerPoint, apply_coboundary,
                    cocycle_eval, cohomology_class, rd_norm, skew_step,
                    solve_coboundary, sup_distance)
from odolab.errors import NonzeroMean
from odolab.presets import dyadic_spec
from odolab.selftest import random_rational_function

spec = dyadic_spec(4)
scale = spec.scale

f = LevelFunction(scale, 2, [3, -1, -1, -1])
g = solve_coboundary(f)
print("f =", [str(v) for v in f.values])
print("g =", [str(v) for v in g.values])
print("difference equation holds exactly:", apply_coboundary(g) == f)

g2 = solve_coboundary(f, method="fourier")
print("prefix-sum vs coefficient method:",
      sup_distance(g.to_binary64(), g2), "(sup distance)")

# the obstruction: nonzero mean has no solution
try:
    solve_coboundary(LevelFunction.constant(scale, 1, 1))
except NonzeroMean as exc:
    print("constant 1 is obstructed:", exc)
print("class of f:", cohomology_class(f), " class of constant 5:",
      cohomology_class(LevelFunction.constant(scale, 5, 1)))

# on the dyadic spec the solution norms contract by a factor 4
rng = random.Random(1)
h = random_rational_function(scale, 3, rng, mean_zero=True)
gh = solve_coboundary(h)
for N in range(3):
    print(f"|g|_{N} = {rd_norm(gh, N, spec):9.4f}"
          f"  <=  |f|_{N + 1}/4 = {rd_norm(h, N + 1, spec) / 4:9.4f}")

# cocycles: the k-step sums of a generator drive the skew product
r = LevelFunction(scale, 2, [1, 0, 0, -1])
c = Cocycle(r)
x = OdometerPoint(scale, 2, 3)
print("\ncocycle sums over the orbit of x = 3:")
for k in range(5):
    print(f"  rho({k}, x) = {cocycle_eval(c, k, x)}")
state = (x, 0)
for _ in range(4):
    state = skew_step(c, state)
print("four skew-product steps land at", state[0].residue,
      "with height", state[1])
