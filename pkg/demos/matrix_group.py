"""The one-parameter group L(lam) = exp(lam A) of graded Pascal matrices."""

from fractions import Fraction

from pascal_rkhs import build_A, build_L, exp_nilpotent
from pascal_rkhs.operators import verify_factorization, verify_semigroup

N = 5
print("A on {0..5}:")
print(build_A(N).to_csv())
print("L(1/2):")
print(build_L(Fraction(1, 2), N).to_csv())

lam, mu = Fraction(2, 3), Fraction(-5, 4)
print("L(lam) L(mu) = L(lam + mu):", bool(verify_semigroup(lam, mu, 16)))
print("exp(lam A) = L(lam):", exp_nilpotent(lam, 16).entries == build_L(lam, 16).entries)
print("L(lam) L(lam)^T = K_lam:", bool(verify_factorization(lam, 16)))
