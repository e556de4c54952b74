"""The thirteen acceptance criteria at their stated scales.

Each test tags itself with ``record_property("criterion", ...)`` so the
terminal summary prints one PASS/FAIL line per criterion.
"""

import math
import random
from fractions import Fraction

from pascal_rkhs.hurwitz import PowerSeries, g_a_family_check, script_h, verify_intertwining
from pascal_rkhs.hypergroup import coproduct_formula, coproduct_oracle
from pascal_rkhs.kernels import (
    KernelKind,
    cauchy_schwarz_check,
    gram_matrix,
    is_positive_definite,
    leading_minors,
    pascal_kernel,
)
from pascal_rkhs.operators import build_L, exp_nilpotent, verify_factorization, verify_semigroup
from pascal_rkhs.rkhs import RkhsElement
from pascal_rkhs.transforms import (
    FiniteSupportSeq,
    bft,
    bft_inv,
    ell2k_inner,
    exponential_family,
    plancherel_second,
    s_embed,
    second_fwd,
    second_inv,
    twisted_basis,
)

F = Fraction


def rand_rational(rng, span=40, den=15):
    return F(rng.randint(-span, span), rng.randint(1, den))


def rand_list(rng, length):
    return [rand_rational(rng) for _ in range(length)]


def test_orthogonality(record_property):
    record_property("criterion", "1 orthogonality, m <= n <= 48")
    for n in range(49):
        for m in range(n + 1):
            s = sum((-1) ** (m + j) * math.comb(n, j) * math.comb(j, m) for j in range(m, n + 1))
            assert s == (1 if m == n else 0), (m, n)


def test_kernel_inversion(record_property):
    record_property("criterion", "2 kernel inversion, m, n <= 40")
    for m in range(41):
        for n in range(41):
            # sum_{l <= n} (-1)^(n-l) C(n, l) K(l, m) = C(m, n)
            s = sum((-1) ** (n - l) * math.comb(n, l) * pascal_kernel(l, m) for l in range(n + 1))
            assert s == math.comb(m, n), (m, n)


def test_diagonal_and_cauchy_schwarz(record_property):
    record_property("criterion", "3 diagonal K(x,x) = C(2x,x) and Cauchy-Schwarz, x <= 64")
    for x in range(65):
        assert pascal_kernel(x, x) == math.comb(2 * x, x)
        assert sum(math.comb(x, j) ** 2 for j in range(x + 1)) == math.comb(2 * x, x)
        for y in range(65):
            assert cauchy_schwarz_check(x, y), (x, y)


def test_first_pair_unitary(record_property):
    record_property("criterion", "4 bft/bft_inv round trips (100 prefixes) and Parseval")
    rng = random.Random(4)
    for _ in range(100):
        vals = rand_list(rng, rng.randint(1, 64))
        assert bft_inv(bft(vals)).values == tuple(vals)
        assert bft(bft_inv(vals)).values == tuple(vals)
    for size in range(33):
        f = rand_list(rng, size)
        # independent route: bft(f) = L f = K a with a = second_fwd(f),
        # so its squared H(K) norm is the Gram form a^T K a
        a = second_fwd(f)
        assert s_embed(a, size + 4).values == bft(f + [0] * 5).values
        assert ell2k_inner(a, a) == sum(v * v for v in f)
        assert RkhsElement(f).norm2() == sum(v * v for v in f)


def test_worked_images(record_property):
    record_property("criterion", "5 worked images of the binomial Fourier transform")
    N = 24
    assert list(bft([1] * (N + 1))) == [2**x for x in range(N + 1)]
    assert list(bft([(-1) ** j for j in range(N + 1)])) == [1] + [0] * N
    for n in range(N + 1):
        delta = [1 if j == n else 0 for j in range(N + 1)]
        assert list(bft(delta)) == [math.comb(x, n) for x in range(N + 1)]
        assert list(bft(twisted_basis(n, N + 1))) == delta
    for a in (F(1, 2), F(-1, 3), F(2)):
        assert list(bft(exponential_family(a, N + 1))) == [(1 + a) ** x for x in range(N + 1)]


def test_second_pair(record_property):
    record_property("criterion", "6 second pair: inverses, adjointness, isometry (100 pairs)")
    rng = random.Random(6)
    for _ in range(100):
        f = FiniteSupportSeq(rand_list(rng, rng.randint(0, 16)))
        g = FiniteSupportSeq(rand_list(rng, rng.randint(0, 16)))
        assert second_inv(second_fwd(f)) == f
        assert second_fwd(second_inv(g)) == g
        g_down = second_inv(g)
        lhs = ell2k_inner(g, second_fwd(f))
        rhs = sum(g_down[n] * f[n] for n in range(max(len(g_down), len(f))))
        assert lhs == rhs
        assert g_down.l2_norm2() == ell2k_inner(g, g)


def test_second_plancherel(record_property):
    record_property("criterion", "7 second Plancherel, support <= 12")
    rng = random.Random(7)
    for size in range(13):
        for _ in range(8):
            f = rand_list(rng, size)
            hk, l2 = plancherel_second(f)
            assert hk == l2 == sum(v * v for v in f)


def test_g_a_example(record_property):
    record_property("criterion", "8 g_a example at a = 1/2, T = 40, x <= 8, tol 1e-12")
    report = g_a_family_check(F(1, 2), 8, 40, tolerance=1e-12)
    assert report.max_deviation <= 1e-12


def test_semigroup_and_factorization(record_property):
    record_property("criterion", "9 L(l)L(m) = L(l+m), L(l) = exp(lA), K_l = L(l)L(l)*")
    rng = random.Random(9)
    special = [F(0), F(1), F(-1), F(1, 2), F(-1, 2)]
    pairs = [(rand_rational(rng, 6, 5), rand_rational(rng, 6, 5)) for _ in range(50)]
    pairs += [(a, b) for a in special for b in special]
    for lam, mu in pairs:
        assert verify_semigroup(lam, mu, 32), (lam, mu)
    for lam in {p for pair in pairs for p in pair}:
        assert exp_nilpotent(lam, 32).entries == build_L(lam, 32).entries, lam
    for lam in (F(1), F(1, 2), F(2), F(-1, 3)):
        for N in (0, 1, 8, 24):
            assert verify_factorization(lam, N), (lam, N)


def test_hurwitz_intertwining(record_property):
    record_property("criterion", "10 H(f) = e^z H(bft_inv f) to degree 32; script_h(e_n)")
    rng = random.Random(10)
    for _ in range(50):
        assert verify_intertwining(rand_list(rng, 33), 32)
    for n in range(17):
        values = [math.comb(x, n) for x in range(33)]
        assert script_h(values, 32) == PowerSeries.monomial(n, 32, F(1, math.factorial(n)))


def test_coproduct(record_property):
    record_property("criterion", "11 co-product formula = oracle, reconstruction, e_1 rule")
    for m in range(13):
        for n in range(13):
            oracle = coproduct_oracle(m, n, extra=8)
            assert coproduct_formula(m, n).coeffs == oracle.coeffs, (m, n)
            for x in range(m + n + 9):
                assert oracle.evaluate(x) == math.comb(x, m) * math.comb(x, n)
    for n in range(17):
        c = coproduct_formula(1, n)
        expected = {n: n, n + 1: n + 1}
        assert {k: v for k, v in c.coeffs.items() if v} == {k: v for k, v in expected.items() if v}


def test_q_kernel_positive(record_property):
    record_property("criterion", "12 q-kernel Gram minors > 0 (N <= 16); Pascal minors = 1 (N <= 32)")
    for q in (F(2), F(1, 2), F(3, 2), F(-1, 2)):
        ok, minors = is_positive_definite(gram_matrix(KernelKind.q(q), 16))
        assert ok and len(minors) == 17 and all(d > 0 for d in minors), q
    assert leading_minors(gram_matrix(KernelKind.pascal(), 32)) == [1] * 33


def test_membership_shadow(record_property):
    record_property("criterion", "13 bft_inv of values recovers ONB coefficients, support <= 16")
    rng = random.Random(13)
    for size in range(17):
        for _ in range(6):
            coeffs = rand_list(rng, size)
            g = RkhsElement(coeffs)
            N = size + 8
            inv = bft_inv(g.values(N)).values
            assert inv == tuple(coeffs) + (0,) * (N + 1 - size)
