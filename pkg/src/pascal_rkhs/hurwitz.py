"""Truncated exponential generating functions and the maps built on them.

``hurwitz_series(f)`` is sum_x f(x) z^x / x!.  Because f = L f_inv with
f_inv = bft_inv(f), the coefficients satisfy f(n)/n! = sum_x f_inv(x)/x! *
1/(n-x)!, i.e. H(f) = e^z H(f_inv) as formal series.  ``script_h`` strips
the exponential again and lands on the monomial basis z^n / n!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .check import Check, failed, passed
from .combinatorics import _natural, as_rational, binom, format_rational
from .rkhs import RkhsElement
from .transforms import Prefix, bft_inv


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients c_0..c_degree of a series truncated at ``degree``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        vals = tuple(as_rational(c) for c in coeffs)
        if not vals:
            raise ValueError("a power series needs degree >= 0")
        object.__setattr__(self, "coeffs", vals)

    @classmethod
    def monomial(cls, n: int, degree: int, scale=1) -> "PowerSeries":
        return cls(as_rational(scale) if k == n else 0 for k in range(degree + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return mul(self, other)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        _same_degree(self, other)
        return PowerSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __call__(self, point) -> Fraction:
        """Exact value of the truncated polynomial at a rational point (Horner)."""
        z = as_rational(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def to_dict(self) -> dict:
        return {"degree": self.degree, "coeffs": [format_rational(c) for c in self.coeffs]}


def _same_degree(p: PowerSeries, q: PowerSeries) -> None:
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")


def mul(p: PowerSeries, q: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common degree."""
    _same_degree(p, q)
    a, b = p.coeffs, q.coeffs
    return PowerSeries(
        sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0)) for n in range(len(a))
    )


def exp_series(sign: int, degree: int) -> PowerSeries:
    """e^z (sign = +1) or e^-z (sign = -1) up to ``degree``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    _natural(degree, "degree")
    return PowerSeries(Fraction(sign**n, math.factorial(n)) for n in range(degree + 1))


def _prefix(f) -> Prefix:
    return f if isinstance(f, Prefix) else Prefix(f)


def hurwitz_series(f, degree: int) -> PowerSeries:
    f = _prefix(f)
    _natural(degree, "degree")
    if degree >= len(f):
        raise ValueError(f"degree {degree} needs f(0..{degree}); prefix has length {len(f)}")
    return PowerSeries(f[x] / math.factorial(x) for x in range(degree + 1))


def verify_intertwining(f, degree: int) -> Check:
    """H(f) == e^z * H(bft_inv(f)) coefficientwise up to ``degree``."""
    f = _prefix(f)
    lhs = hurwitz_series(f, degree)
    rhs = exp_series(1, degree) * hurwitz_series(bft_inv(f), degree)
    for k, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return failed(degree=k, lhs=a, rhs=b)
    return passed(degree=degree)


def script_h(f, degree: int) -> PowerSeries:
    """e^-z H(f); the basis function e_n goes to z^n / n!."""
    return exp_series(-1, degree) * hurwitz_series(f, degree)


def hardy_map(g: RkhsElement, degree: int) -> PowerSeries:
    """sum_n a_n z^n: the coefficient map sending e_n to z^n."""
    if g.lam != 1:
        raise ValueError("the Hardy-space map is defined on H(K) (lambda = 1)")
    _natural(degree, "degree")
    return PowerSeries(g.coeffs[n] for n in range(degree + 1))


def k2_from_basis(zeta, z, degree: int) -> Fraction:
    """K2(zeta, z) rebuilt as sum_n phi_n(zeta) phi_n(z) with phi_n = script_h(e_n).

    Each phi_n is taken from :func:`script_h` applied to the values of e_n,
    so agreement with :func:`kernels.k2_kernel_truncated` ties the two maps
    together rather than restating the kernel's definition.
    """
    total = Fraction(0)
    for n in range(degree + 1):
        values = [binom(x, n) for x in range(degree + 1)]
        phi = script_h(values, degree)
        total += phi(zeta) * phi(z)
    return total


@dataclass(frozen=True)
class GaReport:
    a: Fraction
    x_max: int
    terms: int
    partial_sums: tuple[Fraction, ...]
    max_deviation: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.max_deviation <= self.tolerance


def g_a_partial_sum(a, x: int, terms: int) -> Fraction:
    """sum_{y=x}^{terms} (-1)^(x+y) C(y, x) a^y / y!, exactly."""
    a = as_rational(a)
    return sum(
        ((-1) ** (x + y) * binom(y, x) * a**y / math.factorial(y) for y in range(x, terms + 1)),
        Fraction(0),
    )


def g_a_family_check(a, x_max: int, terms: int, tolerance: float = 1e-12) -> GaReport:
    """Compare the truncated second transform of g_a(x) = a^x/x! with e^-a g_a.

    The partial sums are exact; only the final comparison against
    ``math.exp`` is in floating point.
    """
    a = as_rational(a)
    if terms < x_max + 8:
        raise ValueError("need terms >= x_max + 8")
    sums = tuple(g_a_partial_sum(a, x, terms) for x in range(x_max + 1))
    e = math.exp(-float(a))
    dev = max(
        abs(float(s) - e * float(a**x / math.factorial(x))) for x, s in enumerate(sums)
    )
    return GaReport(a, x_max, terms, sums, dev, tolerance)
