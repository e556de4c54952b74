"""Pascal kernel, its deformations, and exact positivity certificates."""

from fractions import Fraction

from pascal_rkhs import KernelKind, gram_matrix, is_positive_definite, pascal_kernel
from pascal_rkhs.kernels import leading_minors

# The Pascal triangle, read as a kernel K(x, y) = C(x + y, x).
print("Gram matrix of K on {0..5}:")
print(gram_matrix(KernelKind.pascal(), 5).to_csv())

# The diagonal is the central binomial coefficient.
print("K(x, x) for x = 0..8:", [pascal_kernel(x, x) for x in range(9)])

# Every leading minor of the Pascal Gram matrix is exactly 1.
print("Pascal leading minors, N = 12:", [str(d) for d in leading_minors(gram_matrix(KernelKind.pascal(), 12))])

# The q-kernel Gram matrix factors through a unit triangular matrix, so its minors are 1 too.
for q in (Fraction(2), Fraction(1, 2), Fraction(-1, 2)):
    ok, minors = is_positive_definite(gram_matrix(KernelKind.q(q), 6))
    print(f"q = {q}: positive definite = {ok}, last minor = {minors[-1]}")
