"""Scales, supernatural numbers, and digit arithmetic on the odometer.

A scale is a divisibility chain s_1 | s_2 | ... fixing how deep we truncate;
its lcm is a supernatural number, the classifying invariant of the group.
Every integer below s_M has a mixed-radix digit expansion along the chain,
and the carry map gamma strips leading digit blocks.
"""

from odolab import (Scale, SupernaturalNumber, combine, gamma_orbit, n_of,
                    scale_lcm, to_digits, validate_scale)

dyadic = validate_scale([2, 4, 8, 16])
mixed = validate_scale([3, 6, 12])
print("dyadic scale:", list(dyadic), "-> lcm", scale_lcm(dyadic))
print("mixed scale: ", list(mixed), "-> lcm", scale_lcm(mixed))

# supernatural arithmetic: exponent-wise max / min / sum, with inf absorbing
a = SupernaturalNumber.parse("2^inf*3")
b = SupernaturalNumber.parse("2^2*5")
print(f"\nlcm({a}, {b}) =", combine(a, b, "lcm"))
print(f"gcd({a}, {b}) =", combine(a, b, "gcd"))
print(f"mul({a}, {b}) =", combine(a, b, "mul"))
print(f"{b} divides {a}?", b.divides(a))

# digit expansions: x = sum of digit_j * s_{j-1}
print("\ndigits along the dyadic chain (radices 2, 2, 2, 2):")
for x in (0, 5, 11, 15):
    print(f"  {x:2d} -> {to_digits(x, dyadic).digits}")
print("digits along the mixed chain (radices 3, 2, 2):")
for x in (0, 5, 7, 11):
    print(f"  {x:2d} -> {to_digits(x, mixed).digits}")

# the block index n(x) locates x between consecutive moduli,
# and iterating gamma reduces any point to 0 in at most depth steps
print("\ncarry-reduction orbits on the dyadic scale:")
for x in (1, 5, 11, 15):
    print(f"  n({x}) = {n_of(x, dyadic)}, orbit {gamma_orbit(x, dyadic)}")
