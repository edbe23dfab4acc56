"""Integer-valued classes, their free basis, and the dual pairing.

Indicators of residue classes generate all integer-valued locally constant
functions, but they satisfy refinement relations; selecting 1_(x), the
indicator of x mod s_{n(x)}, yields a free basis.  Decomposition is a
triangular peel; evaluation maps expand over carry orbits, making every
pairing a finite integer sum.
"""

from odolab import (LevelFunction, Scale, basis_indicator, decompose,
                    delta_to_e, e_to_delta, indicator, pair, recompose,
                    refine_indicator)
from odolab.ktheory import evaluate

scale = Scale([2, 4, 8, 16])

print("level-2 pictures of a few generators 1_(x):")
for x in (0, 1, 2, 3):
    vec = [int(v.re) for v in basis_indicator(scale, x, 2).values]
    print(f"  1_({x}) -> {vec}")

# refinement: an indicator splits into the finer indicators over its class
pieces = refine_indicator(scale, 1, 0)
print("\n1 mod 2 splits at the next level into:", pieces)
total = sum((indicator(scale, n, x, 3) for n, x in pieces),
            start=LevelFunction.zero(scale, 3))
print("refinement identity holds:", total == indicator(scale, 1, 0, 3))

# the peel: coefficients over the free basis, recovered exactly
evens = LevelFunction(scale, 2, [1, 0, 1, 0])
coeffs = decompose(evens)
print("\nevens decompose as", coeffs, "i.e. 1_(0) - 1_(1)")
print("recompose returns the class:", recompose(scale, coeffs, 2) == evens)

f = LevelFunction(scale, 3, [4, -1, 0, 2, 4, -1, 3, 2])
print("a level-3 class decomposes as", decompose(f))

# evaluation maps delta_z expand over the carry orbit of z
print("\ndelta_11 expands with unit coefficients on the orbit of 11:",
      delta_to_e(scale, 11))
print("e_(5) is the difference of evaluations at", e_to_delta(scale, 5))
for z in (0, 3, 11):
    print(f"  pairing delta_{z} against f gives f({z}) = "
          f"{pair(delta_to_e(scale, z), f)} = {evaluate(f, z)}")
