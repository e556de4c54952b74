"""The Pascal kernel and its relatives, plus exact positivity certificates.

Four kernels live on Z+ x Z+:

* Pascal       K(x, y) = C(x + y, x)
* Lambda(l)    K_l(x, y) = sum_n l^(x+y-2n) C(x, n) C(y, n)
* Q(q)         sum_n [x choose n]_q [y choose n]_q
* SignedPascal (-1)^(x+y) K(x, y)

and the entire-function kernel K2(s, z) = sum_n s^n z^n / (n!)^2, exposed
only as a truncated sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .check import Check, failed, passed
from .combinatorics import _natural, as_rational, binom, format_rational, q_binom


class KernelConsistencyError(ArithmeticError):
    """Two independent evaluations of the same kernel value disagreed."""


@dataclass(frozen=True)
class KernelKind:
    tag: str
    param: Optional[Fraction] = None

    TAGS = ("pascal", "lambda", "q", "signed")

    def __post_init__(self):
        if self.tag not in self.TAGS:
            raise ValueError(f"unknown kernel kind {self.tag!r}")
        if self.tag in ("lambda", "q"):
            if self.param is None:
                raise ValueError(f"{self.tag} kernel needs a parameter")
            object.__setattr__(self, "param", as_rational(self.param))
        elif self.param is not None:
            raise ValueError(f"{self.tag} kernel takes no parameter")
        if self.tag == "lambda" and self.param == 0:
            raise ValueError("lambda = 0 is excluded")
        if self.tag == "q" and self.param == 1:
            raise ValueError("q = 1 is excluded")

    @classmethod
    def pascal(cls) -> "KernelKind":
        return cls("pascal")

    @classmethod
    def lam(cls, value) -> "KernelKind":
        return cls("lambda", value)

    @classmethod
    def q(cls, value) -> "KernelKind":
        return cls("q", value)

    @classmethod
    def signed(cls) -> "KernelKind":
        return cls("signed")

    def __call__(self, x: int, y: int) -> Fraction:
        if self.tag == "pascal":
            return Fraction(pascal_kernel(x, y))
        if self.tag == "lambda":
            return lambda_kernel(x, y, self.param)
        if self.tag == "q":
            return q_kernel(x, y, self.param)
        return Fraction(signed_pascal_kernel(x, y))


@lru_cache(maxsize=None)
def pascal_kernel(x: int, y: int) -> int:
    """K(x, y) = C(x + y, x), cross-checked against the Chu-Vandermonde sum."""
    _natural(x, "x")
    _natural(y, "y")
    closed = binom(x + y, x)
    summed = sum(binom(x, n) * binom(y, n) for n in range(min(x, y) + 1))
    if closed != summed:
        raise KernelConsistencyError(
            f"K({x},{y}): closed form {closed} != Chu-Vandermonde sum {summed}"
        )
    return closed


def signed_pascal_kernel(x: int, y: int) -> int:
    return (-1) ** (x + y) * pascal_kernel(x, y)


def lambda_kernel(x: int, y: int, lam) -> Fraction:
    _natural(x, "x")
    _natural(y, "y")
    lam = as_rational(lam)
    return sum(
        (lam ** (x + y - 2 * n) * binom(x, n) * binom(y, n) for n in range(min(x, y) + 1)),
        Fraction(0),
    )


def q_kernel(x: int, y: int, q) -> Fraction:
    _natural(x, "x")
    _natural(y, "y")
    return sum(
        (q_binom(x, n, q) * q_binom(y, n, q) for n in range(min(x, y) + 1)),
        Fraction(0),
    )


def k2_kernel_truncated(zeta, z, degree: int) -> Fraction:
    """sum_{n <= degree} zeta^n z^n / (n!)^2 for rational arguments."""
    zeta = as_rational(zeta)
    z = as_rational(z)
    _natural(degree, "degree")
    return sum(
        ((zeta * z) ** n / math.factorial(n) ** 2 for n in range(degree + 1)),
        Fraction(0),
    )


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0 or any(len(row) != n for row in self.entries):
            raise ValueError("Gram matrix must be square and non-empty")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, idx):
        x, y = idx
        return self.entries[x][y]

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[x][y] == self.entries[y][x] for x in range(n) for y in range(x))

    def to_csv(self) -> str:
        return "\n".join(",".join(format_rational(v) for v in row) for row in self.entries) + "\n"

    @classmethod
    def from_rows(cls, rows) -> "GramMatrix":
        return cls(tuple(tuple(as_rational(v) for v in row) for row in rows))


def gram_matrix(kind: KernelKind, N: int) -> GramMatrix:
    """Kernel values on {0..N}^2."""
    _natural(N, "N")
    rows = [[None] * (N + 1) for _ in range(N + 1)]
    for x in range(N + 1):
        for y in range(x + 1):
            rows[x][y] = rows[y][x] = kind(x, y)
    return GramMatrix(tuple(tuple(r) for r in rows))


def _det(rows: list[list[Fraction]]) -> Fraction:
    # Gaussian elimination with row pivoting; only used past a zero Bareiss pivot
    a = [list(r) for r in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] / a[k][k]
            if factor:
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
    return det


def leading_minors(g: GramMatrix) -> list[Fraction]:
    """All leading principal minors, via fraction-free (Bareiss) elimination.

    After step k the pivot a[k+1][k+1] is exactly the (k+2)-th leading minor;
    every division in the update is exact.
    """
    a = [list(row) for row in g.entries]
    n = len(a)
    minors = [Fraction(a[0][0])]
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            minors.extend(
                _det([row[: m + 1] for row in g.entries[: m + 1]]) for m in range(k + 1, n)
            )
            return minors
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
        prev = pivot
        minors.append(Fraction(a[k + 1][k + 1]))
    return minors


def is_positive_definite(g: GramMatrix) -> tuple[bool, list[Fraction]]:
    """Sylvester's criterion, exactly. Returns the verdict and every minor."""
    if not g.is_symmetric():
        raise ValueError("positivity test requires a symmetric matrix")
    minors = leading_minors(g)
    return all(m > 0 for m in minors), minors


def cauchy_schwarz_check(x: int, y: int) -> Check:
    """K(x, y)^2 <= C(2x, x) C(2y, y)."""
    lhs = pascal_kernel(x, y) ** 2
    rhs = binom(2 * x, x) * binom(2 * y, y)
    if lhs <= rhs:
        return passed(lhs=lhs, rhs=rhs)
    return failed(x=x, y=y, lhs=lhs, rhs=rhs)
