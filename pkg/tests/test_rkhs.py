import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rational_lists
from pascal_rkhs.kernels import lambda_kernel, pascal_kernel
from pascal_rkhs.rkhs import (
    OnbFunction,
    RkhsElement,
    evaluate,
    factorial_domination_check,
    from_values,
    growth_bound_check,
    inner,
    kernel_section,
    kernel_section_check,
    membership_diagnostic,
    reproducing_check,
    t_minus_lambda_coeffs,
)
from pascal_rkhs.transforms import FiniteSupportSeq, Prefix, bft

F = Fraction


def test_eval_examples():
    assert evaluate(RkhsElement.basis(2), 4) == 6
    for lam in (F(1), F(-2, 3), F(5)):
        for x in range(6):
            assert evaluate(RkhsElement.basis(0, lam), x) == lam**x
    a = F(1, 2)
    g = RkhsElement([a**n for n in range(17)])
    assert evaluate(g, 5) == F(3, 2) ** 5


def test_inner_examples():
    for n in range(6):
        for m in range(6):
            assert inner(RkhsElement.basis(n), RkhsElement.basis(m)) == (n == m)
    for n in range(8):
        for m in range(8):
            assert inner(kernel_section(n), kernel_section(m)) == pascal_kernel(n, m)
    a, b, T = F(1, 3), F(-3, 4), 20
    ga = RkhsElement([a**n for n in range(T + 1)])
    gb = RkhsElement([b**n for n in range(T + 1)])
    assert inner(ga, gb) == (1 - (a * b) ** (T + 1)) / (1 - a * b)


def test_inner_rejects_mixed_spaces():
    with pytest.raises(ValueError):
        inner(RkhsElement([1], 1), RkhsElement([1], 2))


def test_kernel_section_examples():
    assert kernel_section(0).coeffs == FiniteSupportSeq([1])
    assert all(evaluate(kernel_section(0), x) == 1 for x in range(10))
    k2 = kernel_section(2)
    assert k2.coeffs == FiniteSupportSeq([1, 2, 1])
    assert evaluate(k2, 3) == 10 == pascal_kernel(3, 2)
    k = kernel_section(1, 2)
    assert k.coeffs == FiniteSupportSeq([2, 1])
    assert evaluate(k, 1) == 5 == lambda_kernel(1, 1, 2)


@pytest.mark.parametrize("lam", [F(1), F(1, 2), F(-3)])
def test_kernel_sections_reproduce_kernel(lam):
    for x in range(12):
        for y in range(12):
            assert kernel_section_check(x, y, lam)


def test_reproducing_examples():
    c = reproducing_check(RkhsElement.basis(3), 5)
    assert c and c.witness["value"] == 10
    assert reproducing_check(RkhsElement(), 7).witness["value"] == 0


@given(rational_lists(0, 16), st.integers(0, 32), st.sampled_from([F(1), F(1, 2), F(-2)]))
def test_reproducing_property(coeffs, x, lam):
    assert reproducing_check(RkhsElement(coeffs, lam), x)


def test_onb_function():
    e = OnbFunction(3)
    assert [e(x) for x in range(6)] == [0, 0, 0, 1, 4, 10]
    e = OnbFunction(1, F(1, 2))
    assert e(3) == F(1, 4) * 3
    assert e.element() == RkhsElement.basis(1, F(1, 2))


def test_orthonormality():
    for n in range(33):
        for m in range(33):
            assert inner(OnbFunction(n).element(), OnbFunction(m).element()) == (n == m)


def test_kernel_section_norms():
    for y in range(25):
        assert inner(kernel_section(y), kernel_section(y)) == math.comb(2 * y, y)


@given(rational_lists(0, 16))
def test_values_are_bft_of_coefficients(coeffs):
    g = RkhsElement(coeffs)
    N = len(coeffs) + 5
    assert g.values(N) == bft(FiniteSupportSeq(coeffs).padded(N + 1))
    assert from_values(g.values(N)) == g


def test_membership_examples():
    e2 = Prefix(math.comb(x, 2) for x in range(5))
    r = membership_diagnostic(e2)
    assert list(r.inv_prefix) == [0, 0, 1, 0, 0]
    assert r.verdict == "member"
    assert r.necessary_bound_ok

    g1 = Prefix(F(1, math.factorial(x)) for x in range(12))
    r = membership_diagnostic(g1)
    assert r.verdict == "advisory-only"
    assert r.partial_l2_sums == tuple(sorted(r.partial_l2_sums))

    r = membership_diagnostic(Prefix(2**x for x in range(8)))
    assert list(r.inv_prefix) == [1] * 8
    assert r.verdict == "advisory-only"
    assert r.partial_l2_sums == tuple(range(1, 9))


def test_g1_inverse_values():
    # g1^inv(n) = (-1)^n sum_x C(n, x) (-1)^x / x!, checked by direct summation
    g1 = Prefix(F(1, math.factorial(x)) for x in range(10))
    want = [
        (-1) ** n * sum(F(math.comb(n, x) * (-1) ** x, math.factorial(x)) for x in range(n + 1))
        for n in range(10)
    ]
    assert list(membership_diagnostic(g1).inv_prefix) == want
    assert want[:4] == [1, 0, F(-1, 2), F(2, 3)]


def test_membership_preconditions():
    with pytest.raises(ValueError):
        membership_diagnostic([1, 2, 3])


@settings(max_examples=40)
@given(rational_lists(0, 16))
def test_membership_for_finite_coefficients(coeffs):
    g = RkhsElement(coeffs)
    r = membership_diagnostic(g.values(len(coeffs) + 3))
    assert r.verdict == "member"
    assert r.necessary_bound_ok
    assert r.partial_l2_sums[-1] == g.norm2()


def test_growth_bound_examples():
    assert growth_bound_check(RkhsElement.basis(0), 30)
    k3 = kernel_section(3)
    assert evaluate(k3, 3) ** 2 == k3.norm2() * math.comb(6, 3)
    assert growth_bound_check(k3, 24)


@given(rational_lists(0, 10))
def test_growth_bound_property(coeffs):
    assert growth_bound_check(RkhsElement(coeffs), 24)


@settings(max_examples=40)
@given(rational_lists(1, 12))
def test_factorial_domination(coeffs):
    assert factorial_domination_check(RkhsElement(coeffs), 12, 48)


def test_t_minus_lambda_on_basis():
    for n in range(5):
        assert t_minus_lambda_coeffs(RkhsElement.basis(n, F(3, 2))) == FiniteSupportSeq.delta(n)


def test_element_arithmetic():
    g = RkhsElement([1, 2]) + RkhsElement([0, -2, 3]).scale(F(1, 2))
    assert g.coeffs == FiniteSupportSeq([1, 1, F(3, 2)])
