"""The dual group of roots of unity and non-archimedean length functions.

Roots of unity are exact reduced fractions k/s, so group structure and
subgroup membership never touch floating point.  A length function assigns
l_m to every element whose minimal level is m; the values determine the
scale and vice versa, which the classification round trip demonstrates.
"""

from fractions import Fraction

from odolab import (GrowthParams, LengthSpec, Scale, classify, d_of_r,
                    enumerate_subgroup, growth_certificate, lambda_eval,
                    lambda_table, make_root, scale_form, totient_sum_bound,
                    verify_axioms)

dyadic = Scale([2, 4, 8, 16])

print("the subgroup of order 8, in canonical (order, numerator) order:")
for z in enumerate_subgroup(dyadic, 3):
    m, j = scale_form(z, dyadic)
    print(f"  {str(z):12s} order {z.order:2d} canonical form (m={m}, j={j})")

# a length specification: level values 2, 4, 8, 16 over the dyadic chain
spec = LengthSpec(dyadic, (2, 4, 8, 16))
print("\nlengths of a few elements:")
for z in (make_root(0, 1), make_root(1, 2), make_root(3, 4), make_root(5, 16)):
    print(f"  length({z}) = {lambda_eval(spec, z)}")

# the axioms hold exhaustively on the truncated group ...
report = verify_axioms(lambda_table(spec))
print("\naxiom check:", "all pass" if report.all_pass() else report.witnesses)

# ... and the table alone recovers the (scale, values) data exactly
recovered = classify(lambda_table(spec))
print("classification round trip:",
      recovered.scale.entries, [str(v) for v in recovered.l])

# growth: length(z) >= c * order(z)^alpha certified by exact comparison
params = GrowthParams(Fraction(1), Fraction(1))
print("\ngrowth certificate (c=1, alpha=1):", bool(growth_certificate(spec, params)))
quadratic = GrowthParams(Fraction(1), Fraction(2))
cert = growth_certificate(spec, quadratic)
print("growth certificate (c=1, alpha=2):", bool(cert),
      f"(violated at {cert.witness})")

# the counting function d(r) and its totient-sum majorant
print("\nsublevel counts against the totient bound:")
for r in (1, 3, 4, 10, 16):
    print(f"  d({r:2d}) = {d_of_r(spec, r):2d} <= {totient_sum_bound(params, r)}")
