"""Finite leading blocks of the infinite triangular matrices.

``L(lam)[x][y] = lam^(x-y) C(x, y)`` for y <= x, ``M(lam) = L(lam)^T``,
``D(lam) = diag(lam^x)`` and the sub-diagonal generator ``A[x][x-1] = x``.
Products of two lower (or two upper) triangular matrices only ever sum over
indices between the row and column, so the leading block of an infinite
product is the product of leading blocks.  Mixed lower x upper products do
not have that property and are refused by :func:`mat_mul`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .check import Check, failed, passed
from .combinatorics import _natural, as_rational, binom, format_rational
from .kernels import lambda_kernel
from .transforms import FiniteSupportSeq, _finite

ORIENTATIONS = ("lower", "upper", "diagonal")


@dataclass(frozen=True)
class TriangularMatrix:
    orientation: str
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}")
        n = len(self.entries)
        if n == 0 or any(len(r) != n for r in self.entries):
            raise ValueError("matrix must be square with size >= 1")
        for x in range(n):
            for y in range(n):
                if self.entries[x][y] != 0 and not _allowed(self.orientation, x, y):
                    raise ValueError(
                        f"nonzero entry ({x},{y}) violates {self.orientation} orientation"
                    )

    @classmethod
    def from_function(cls, orientation: str, size: int, fn) -> "TriangularMatrix":
        rows = tuple(
            tuple(
                as_rational(fn(x, y)) if _allowed(orientation, x, y) else Fraction(0)
                for y in range(size)
            )
            for x in range(size)
        )
        return cls(orientation, rows)

    @classmethod
    def identity(cls, size: int) -> "TriangularMatrix":
        return cls.from_function("diagonal", size, lambda x, y: 1)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, idx) -> Fraction:
        x, y = idx
        return self.entries[x][y]

    @property
    def T(self) -> "TriangularMatrix":
        flipped = {"lower": "upper", "upper": "lower", "diagonal": "diagonal"}[self.orientation]
        n = self.size
        return TriangularMatrix(
            flipped, tuple(tuple(self.entries[y][x] for y in range(n)) for x in range(n))
        )

    def block(self, m: int) -> "TriangularMatrix":
        """Leading (m+1) x (m+1) block."""
        if not 0 <= m < self.size:
            raise ValueError(f"block index {m} out of range for size {self.size}")
        return TriangularMatrix(self.orientation, tuple(r[: m + 1] for r in self.entries[: m + 1]))

    def __matmul__(self, other):
        if isinstance(other, TriangularMatrix):
            return mat_mul(self, other)
        return self.apply(other)

    def apply(self, vector: Iterable) -> list[Fraction]:
        v = [as_rational(t) for t in vector]
        if len(v) != self.size:
            raise ValueError(f"vector length {len(v)} != matrix size {self.size}")
        return [sum((a * b for a, b in zip(row, v) if a), Fraction(0)) for row in self.entries]

    def scale(self, c) -> "TriangularMatrix":
        c = as_rational(c)
        return TriangularMatrix(self.orientation, tuple(tuple(c * e for e in r) for r in self.entries))

    def __add__(self, other: "TriangularMatrix") -> "TriangularMatrix":
        _same_size(self, other)
        orient = _combine(self.orientation, other.orientation)
        return TriangularMatrix(
            orient,
            tuple(
                tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def to_csv(self) -> str:
        return "\n".join(",".join(format_rational(v) for v in row) for row in self.entries) + "\n"


def _allowed(orientation: str, x: int, y: int) -> bool:
    if orientation == "lower":
        return y <= x
    if orientation == "upper":
        return x <= y
    return x == y


def _same_size(X: TriangularMatrix, Y: TriangularMatrix) -> None:
    if X.size != Y.size:
        raise ValueError(f"size mismatch: {X.size} vs {Y.size}")


def _combine(a: str, b: str) -> str:
    if a == "diagonal":
        return b
    if b == "diagonal" or a == b:
        return a
    raise ValueError(
        f"{a} x {b} leaves the triangular algebra; truncation would not commute with the product"
    )


def mat_mul(X: TriangularMatrix, Y: TriangularMatrix) -> TriangularMatrix:
    _same_size(X, Y)
    orient = _combine(X.orientation, Y.orientation)
    n = X.size
    a, b = X.entries, Y.entries
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            if not _allowed(orient, x, y):
                row.append(Fraction(0))
                continue
            lo, hi = (y, x) if orient != "upper" else (x, y)
            row.append(sum((a[x][k] * b[k][y] for k in range(lo, hi + 1)), Fraction(0)))
        rows.append(tuple(row))
    return TriangularMatrix(orient, tuple(rows))


def _gram_of(X: TriangularMatrix) -> list[list[Fraction]]:
    # X X^T for lower X: row x, col y sums k <= min(x, y); stays inside the block
    n = X.size
    e = X.entries
    return [
        [sum((e[x][k] * e[y][k] for k in range(min(x, y) + 1)), Fraction(0)) for y in range(n)]
        for x in range(n)
    ]


def build_L(lam, N: int) -> TriangularMatrix:
    """L(lam) on {0..N}; lam = 1 is the Pascal matrix, lam = 0 the identity."""
    lam = as_rational(lam)
    _natural(N, "N")
    return TriangularMatrix.from_function("lower", N + 1, lambda x, y: lam ** (x - y) * binom(x, y))


def build_M(lam, N: int) -> TriangularMatrix:
    return build_L(lam, N).T


def build_D(lam, N: int) -> TriangularMatrix:
    lam = as_rational(lam)
    _natural(N, "N")
    return TriangularMatrix.from_function("diagonal", N + 1, lambda x, y: lam**x)


def build_A(N: int) -> TriangularMatrix:
    """Generator of the group: A[x][x-1] = x, zero elsewhere."""
    _natural(N, "N")
    return TriangularMatrix.from_function("lower", N + 1, lambda x, y: x if y == x - 1 else 0)


def exp_nilpotent(lam, N: int) -> TriangularMatrix:
    """exp(lam A) on {0..N}; the series stops since A^(N+1) = 0 on the block."""
    lam = as_rational(lam)
    _natural(N, "N")
    size = N + 1
    # right-multiplying by lam A shifts columns: (T lam A)[x][y] = T[x][y+1] (y+1) lam
    term = [[Fraction(int(x == y)) for y in range(size)] for x in range(size)]
    total = [row[:] for row in term]
    for k in range(1, size):
        term = [
            [row[y + 1] * (y + 1) * lam / k if y + 1 < size else Fraction(0) for y in range(size)]
            for row in term
        ]
        for x in range(size):
            for y in range(x + 1):
                total[x][y] += term[x][y]
    return TriangularMatrix("lower", tuple(tuple(row) for row in total))


def _first_difference(X, Y):
    for x in range(len(X)):
        for y in range(len(X)):
            if X[x][y] != Y[x][y]:
                return x, y
    return None


def verify_semigroup(lam, mu, N: int) -> Check:
    """L(lam) L(mu) == L(lam + mu) on the block."""
    lam, mu = as_rational(lam), as_rational(mu)
    product = build_L(lam, N) @ build_L(mu, N)
    target = build_L(lam + mu, N)
    diff = _first_difference(product.entries, target.entries)
    if diff is None:
        return passed(lam=lam, mu=mu, N=N)
    x, y = diff
    return failed(entry=(x, y), product=product[x, y], expected=target[x, y])


def verify_factorization(lam, N: int) -> Check:
    """L(lam) L(lam)^T == K_lam on {0..N}^2 (lam = 1: K = L L*)."""
    lam = as_rational(lam)
    product = _gram_of(build_L(lam, N))
    for x in range(N + 1):
        for y in range(N + 1):
            k = lambda_kernel(x, y, lam)
            if product[x][y] != k:
                return failed(entry=(x, y), product=product[x][y], kernel=k)
    return passed(lam=lam, N=N)


def zadeh_conjugation_check(lam, mu, N: int) -> Check:
    """L(lam) = D(lam) L(1) D(lam)^-1, and the conjugated product chain."""
    lam, mu = as_rational(lam), as_rational(mu)
    if lam == 0 or mu == 0:
        raise ValueError("D(lam) is singular at lam = 0")
    P = build_L(1, N)
    D, Dinv = build_D(lam, N), build_D(1 / lam, N)
    E, Einv = build_D(mu, N), build_D(1 / mu, N)
    steps = {
        "L(lam)": (D @ P @ Dinv, build_L(lam, N)),
        "L(mu)": (E @ P @ Einv, build_L(mu, N)),
        "chain": (D @ P @ Dinv @ E @ P @ Einv, build_L(lam, N) @ build_L(mu, N)),
        "collapsed": (D @ P @ build_D(mu / lam, N) @ P @ Einv, build_L(lam + mu, N)),
    }
    for name, (got, want) in steps.items():
        diff = _first_difference(got.entries, want.entries)
        if diff is not None:
            x, y = diff
            return failed(step=name, entry=diff, got=got[x, y], expected=want[x, y])
    return passed(lam=lam, mu=mu, N=N)


def t_minus_lambda(f, lam) -> FiniteSupportSeq:
    """L(lam)^T f = sum_{x >= m} lam^(x-m) C(x, m) f(x), finitely supported f only."""
    lam = as_rational(lam)
    vals = _finite(f).values
    top = len(vals)
    return FiniteSupportSeq(
        sum((lam ** (x - m) * binom(x, m) * vals[x] for x in range(m, top)), Fraction(0))
        for m in range(top)
    )

