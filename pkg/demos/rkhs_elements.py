"""Elements of H(K) stored by their coefficients in the basis e_n(x) = C(x, n)."""

from fractions import Fraction

from pascal_rkhs import RkhsElement, bft_inv, inner, kernel_section, membership_diagnostic
from pascal_rkhs.rkhs import reproducing_check

g = RkhsElement([1, Fraction(1, 2), 0, -3])
print("g(0..7)       =", [str(v) for v in g.values(7)])
print("||g||^2       =", g.norm2())

# The kernel section K(., y) has coefficients C(y, n); pairing with it evaluates.
for x in (0, 3, 6):
    print(f"<g, K(., {x})> = {inner(g, kernel_section(x))}  check: {bool(reproducing_check(g, x))}")

# Values determine coefficients: bft_inv of a prefix ends in exact zeros.
print("bft_inv(values) =", [str(v) for v in bft_inv(g.values(7))])

# Membership evidence for an arbitrary prefix.
print("x^2 + 1 :", membership_diagnostic([x * x + 1 for x in range(8)]).verdict)
print("3^x     :", membership_diagnostic([3**x for x in range(8)]).verdict)
