"""Elements of H(K) and H(K_lam) stored by orthonormal-basis coefficients.

With e_n^(lam)(x) = lam^(x-n) C(x, n) the basis is orthonormal, so an
element g = sum_n a_n e_n^(lam) has ||g||^2 = sum_n a_n^2 and point values
are finite sums (e_n vanishes below n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .check import Check, failed, passed
from .combinatorics import _natural, as_rational, binom
from .kernels import lambda_kernel
from .transforms import FiniteSupportSeq, Prefix, bft_inv


@dataclass(frozen=True)
class OnbFunction:
    """e_n^(lam), the n-th basis function."""

    n: int
    lam: Fraction = Fraction(1)

    def __post_init__(self):
        _natural(self.n, "n")
        object.__setattr__(self, "lam", as_rational(self.lam))

    def __call__(self, x: int) -> Fraction:
        _natural(x, "x")
        if x < self.n:
            return Fraction(0)
        return self.lam ** (x - self.n) * binom(x, self.n)

    def element(self) -> "RkhsElement":
        return RkhsElement.basis(self.n, self.lam)


@dataclass(frozen=True)
class RkhsElement:
    coeffs: FiniteSupportSeq
    lam: Fraction = Fraction(1)

    def __init__(self, coeffs: Iterable = (), lam=1):
        if not isinstance(coeffs, FiniteSupportSeq):
            coeffs = FiniteSupportSeq(coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "lam", as_rational(lam))

    @classmethod
    def basis(cls, n: int, lam=1) -> "RkhsElement":
        return cls(FiniteSupportSeq.delta(n), lam)

    def __call__(self, x: int) -> Fraction:
        return evaluate(self, x)

    def values(self, N: int) -> Prefix:
        return Prefix(evaluate(self, x) for x in range(N + 1))

    def norm2(self) -> Fraction:
        return self.coeffs.l2_norm2()

    def __add__(self, other: "RkhsElement") -> "RkhsElement":
        _same_lambda(self, other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RkhsElement([self.coeffs[i] + other.coeffs[i] for i in range(n)], self.lam)

    def scale(self, c) -> "RkhsElement":
        c = as_rational(c)
        return RkhsElement([c * a for a in self.coeffs], self.lam)


def _same_lambda(g: RkhsElement, h: RkhsElement) -> None:
    if g.lam != h.lam:
        raise ValueError(f"elements live in different spaces (lambda {g.lam} vs {h.lam})")


def evaluate(g: RkhsElement, x: int) -> Fraction:
    """g(x) = sum_{n <= x} a_n lam^(x-n) C(x, n)."""
    _natural(x, "x")
    lam = g.lam
    return sum(
        (
            a * lam ** (x - n) * binom(x, n)
            for n, a in enumerate(g.coeffs.values[: x + 1])
            if a
        ),
        Fraction(0),
    )


def inner(g: RkhsElement, h: RkhsElement) -> Fraction:
    _same_lambda(g, h)
    return sum((a * b for a, b in zip(g.coeffs.values, h.coeffs.values)), Fraction(0))


def kernel_section(y: int, lam=1) -> RkhsElement:
    """K_lam(., y) = sum_n e_n^(lam)(y) e_n^(lam)."""
    _natural(y, "y")
    lam = as_rational(lam)
    return RkhsElement([lam ** (y - n) * binom(y, n) for n in range(y + 1)], lam)


def reproducing_check(g: RkhsElement, x: int) -> Check:
    """<g, K(., x)> == g(x)."""
    lhs = inner(g, kernel_section(x, g.lam))
    rhs = evaluate(g, x)
    if lhs == rhs:
        return passed(value=lhs)
    return failed(x=x, inner=lhs, value=rhs)


def kernel_section_check(x: int, y: int, lam=1) -> Check:
    """K_lam(., y) evaluated at x reproduces the kernel."""
    got = evaluate(kernel_section(y, lam), x)
    want = lambda_kernel(x, y, lam)
    return passed(value=got) if got == want else failed(x=x, y=y, section=got, kernel=want)


def from_values(values: Prefix, lam=1) -> RkhsElement:
    """The element whose coefficients are the inverse transform of the values.

    Only meaningful for lam = 1; the coefficients are determined by the
    prefix but an unknown tail may add further basis functions.
    """
    if as_rational(lam) != 1:
        raise ValueError("coefficient recovery from values is implemented for lambda = 1")
    return RkhsElement(bft_inv(values).values)


def t_minus_lambda_coeffs(g: RkhsElement) -> FiniteSupportSeq:
    """T_{-lam} on an element given in its basis: e_n^(lam) -> delta_n."""
    return g.coeffs


@dataclass(frozen=True)
class MembershipReport:
    prefix_used: int
    inv_prefix: Prefix
    partial_l2_sums: tuple[Fraction, ...]
    bound_ratios: tuple[Fraction, ...]
    necessary_bound_ok: bool
    verdict: str
    support_end: int | None = field(default=None)


def membership_diagnostic(f, zero_tail: int = 2) -> MembershipReport:
    """Evidence for or against f in H(K) from the prefix f(0..N).

    f is in H(K) exactly when its inverse transform is square summable.  A
    finite prefix cannot decide that in general, so the verdict is
    ``"member"`` only when the inverse transform ends in at least
    ``zero_tail`` exact zeros (the finitely supported case); otherwise it is
    ``"advisory-only"`` and the partial sums and the growth ratios
    f(x)^2 / C(2x, x) are returned as evidence.

    ``necessary_bound_ok`` is f(x)^2 <= S * C(2x, x) on the prefix with S
    the last partial l2 sum; for a member whose coefficients sit inside
    the window this is the Cauchy-Schwarz bound with the true norm.
    """
    f = f if isinstance(f, Prefix) else Prefix(f)
    if len(f) < 4:
        raise ValueError("membership diagnostic needs a prefix of length >= 4")
    if zero_tail < 1:
        raise ValueError("zero_tail must be >= 1")
    inv = bft_inv(f)
    sums, running = [], Fraction(0)
    for v in inv:
        running += v * v
        sums.append(running)
    ratios = tuple(v * v / binom(2 * x, x) for x, v in enumerate(f))
    bound_ok = all(r <= running for r in ratios)
    nonzero = [i for i, v in enumerate(inv) if v != 0]
    end = nonzero[-1] if nonzero else -1
    member = len(f) - 1 - end >= zero_tail
    return MembershipReport(
        prefix_used=len(f),
        inv_prefix=inv,
        partial_l2_sums=tuple(sums),
        bound_ratios=ratios,
        necessary_bound_ok=bound_ok,
        verdict="member" if member else "advisory-only",
        support_end=end if member else None,
    )


def growth_bound_check(g: RkhsElement, N: int) -> Check:
    """g(x)^2 <= ||g||^2 C(2x, x) for x <= N (lam = 1)."""
    if g.lam != 1:
        raise ValueError("the C(2x, x) bound is the diagonal of the Pascal kernel (lambda = 1)")
    m = g.norm2()
    for x in range(N + 1):
        v = evaluate(g, x)
        if v * v > m * binom(2 * x, x):
            return failed(x=x, value_sq=v * v, bound=m * binom(2 * x, x))
    return passed(norm2=m)


def factorial_domination_check(g: RkhsElement, head: int, horizon: int) -> Check:
    """max_{x <= horizon} |g(x)|/x! is attained within x <= head.

    The finite-horizon face of |g(n)| <= M n! eps^n: point values of a
    finitely supported element are polynomial in x, so x! takes over.
    """
    if head > horizon:
        raise ValueError("head must not exceed horizon")
    scaled = [abs(evaluate(g, x)) / math.factorial(x) for x in range(horizon + 1)]
    head_max = max(scaled[: head + 1])
    tail_max = max(scaled)
    if tail_max <= head_max:
        return passed(max=head_max)
    worst = scaled.index(tail_max)
    return failed(x=worst, scaled=tail_max, head_max=head_max)
