"""Exponential generating functions and products of basis functions."""

import math
from fractions import Fraction

from pascal_rkhs import coproduct_formula, coproduct_oracle, hurwitz_series, script_h
from pascal_rkhs.hurwitz import g_a_family_check, verify_intertwining

values = [x**3 - 2 * x for x in range(11)]
print("H(f)      =", [str(c) for c in hurwitz_series(values, 6).coeffs])
print("e^-z H(f) =", [str(c) for c in script_h(values, 6).coeffs])
print("H(f) = e^z H(bft_inv f):", bool(verify_intertwining(values, 10)))

# script_h sends the basis function e_3 to z^3 / 3!.
print("script_h(e_3) =", [str(c) for c in script_h([math.comb(x, 3) for x in range(7)], 6).coeffs])

# e_m e_n expands in e_k for max(m, n) <= k <= m + n with integer coefficients.
for m, n in ((1, 4), (2, 2), (3, 5)):
    c = coproduct_oracle(m, n)
    agree = c.coeffs == coproduct_formula(m, n).coeffs
    print(f"e_{m} e_{n} =", {k: int(v) for k, v in c.coeffs.items() if v}, "formula agrees:", agree)

# The second transform of a^x / x! is e^-a a^x / x!; exact partial sums, float comparison.
report = g_a_family_check(Fraction(1, 2), 8, 40)
print("g_a deviation at a = 1/2:", report.max_deviation)
