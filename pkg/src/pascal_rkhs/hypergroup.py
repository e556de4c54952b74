"""Structure constants of the pointwise product e_m * e_n in the basis {e_k}.

Since bft_inv(e_k) = delta_k, the coefficient of e_k in e_m * e_n is
bft_inv(e_m * e_n)(k); the oracle computes exactly that.  The closed form
under test is

    c_k = (-1)^(n+k) C(k, n) sum_{l=0}^{k-n} (-1)^l C(k-n, l) C(l+n, m).

Dropping the (-1)^l gives a different (wrong) expansion; it is kept as
:func:`coproduct_formula_unsigned` so the discrepancy stays testable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import _natural, binom
from .transforms import bft_inv


class CoproductError(ArithmeticError):
    pass


@dataclass(frozen=True)
class CoproductExpansion:
    m: int
    n: int
    coeffs: dict[int, Fraction]

    def __post_init__(self):
        lo, hi = max(self.m, self.n), self.m + self.n
        stray = [k for k, c in self.coeffs.items() if c != 0 and not lo <= k <= hi]
        if stray:
            raise CoproductError(f"coefficients outside [{lo}, {hi}] at {stray}")

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs.get(k, Fraction(0))

    def evaluate(self, x: int) -> Fraction:
        """sum_k c_k e_k(x)."""
        return sum((c * binom(x, k) for k, c in self.coeffs.items()), Fraction(0))


def _window(m: int, n: int) -> range:
    return range(max(m, n), m + n + 1)


def coproduct_oracle(m: int, n: int, extra: int = 8) -> CoproductExpansion:
    """Expansion from bft_inv of the product's values on 0..m+n+extra.

    Asserts vanishing outside [max(m, n), m + n] on the whole window and
    exact reconstruction of C(x, m) C(x, n) there.
    """
    _natural(m, "m")
    _natural(n, "n")
    top = m + n + extra
    product = [binom(x, m) * binom(x, n) for x in range(top + 1)]
    inv = bft_inv(product)
    lo, hi = max(m, n), m + n
    for k, c in enumerate(inv):
        if c != 0 and not lo <= k <= hi:
            raise CoproductError(f"e_{m} e_{n}: nonzero coefficient {c} at k = {k}")
    expansion = CoproductExpansion(m, n, {k: inv[k] for k in _window(m, n)})
    for x in range(top + 1):
        if expansion.evaluate(x) != product[x]:
            raise CoproductError(f"e_{m} e_{n}: reconstruction fails at x = {x}")
    return expansion


def coproduct_formula(m: int, n: int) -> CoproductExpansion:
    _natural(m, "m")
    _natural(n, "n")
    coeffs = {}
    for k in _window(m, n):
        inner = sum((-1) ** l * binom(k - n, l) * binom(l + n, m) for l in range(k - n + 1))
        coeffs[k] = Fraction((-1) ** (n + k) * binom(k, n) * inner)
    return CoproductExpansion(m, n, coeffs)


def coproduct_formula_unsigned(m: int, n: int) -> dict[int, Fraction]:
    """The same sum without (-1)^l; does not reproduce e_1 e_n in general."""
    out = {}
    for k in _window(m, n):
        inner = sum(binom(k - n, l) * binom(l + n, m) for l in range(k - n + 1))
        out[k] = Fraction((-1) ** (n + k) * binom(k, n) * inner)
    return out
