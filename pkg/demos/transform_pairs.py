"""The two transform pairs on sequences over the non-negative integers."""

from fractions import Fraction

from pascal_rkhs import FiniteSupportSeq, bft, bft_inv, second_fwd, second_inv
from pascal_rkhs.transforms import NotFinitelySupported, Prefix, plancherel_second

# bft is lower triangular: a prefix of f determines the same prefix of bft(f).
ones = [1] * 8
print("bft(1, 1, ...)       =", [str(v) for v in bft(ones)])
print("bft((-1)^j)          =", [str(v) for v in bft([(-1) ** j for j in range(8)])])
print("bft(a^j), a = 1/2    =", [str(v) for v in bft([Fraction(1, 2) ** j for j in range(6)])])
print("round trip recovers f:", list(bft_inv(bft(ones))) == ones)

# The second pair is upper triangular, so it needs an exact zero tail.
f = FiniteSupportSeq([1, Fraction(-1, 3), 0, 2])
g = second_fwd(f)
print("second_fwd(f)        =", [str(v) for v in g.values])
print("second_inv undoes it :", second_inv(g) == f)
print("Plancherel (H(K) norm, l2 norm):", plancherel_second(f))

try:
    second_fwd(Prefix([1, 2, 3]))
except NotFinitelySupported as exc:
    print("a bare prefix is refused:", exc)
