"""The two transform pairs on sequences over Z+.

The binomial Fourier transform and its inverse are lower triangular:

    bft(f)(x)     = sum_{j <= x} C(x, j) f(j)
    bft_inv(g)(n) = sum_{l <= n} C(n, l) (-1)^(l - n) g(l)

so a prefix f(0..N) determines the image on 0..N exactly and they act
prefix-to-prefix.  The second pair is upper triangular,

    second_fwd(f)(x) = sum_{y >= x} (-1)^(x + y) C(y, x) f(y)
    second_inv(g)(n) = sum_{x >= n} C(x, n) g(x)

and depends on the whole tail, so it only accepts sequences whose finite
support is declared (:class:`FiniteSupportSeq`).  A :class:`Prefix` passed
there is rejected rather than silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .check import Check, failed, passed
from .combinatorics import _natural, as_rational, binom
from .kernels import pascal_kernel, signed_pascal_kernel


class NotFinitelySupported(ValueError):
    """An upper-triangular transform was handed a sequence without declared finite support."""


@dataclass(frozen=True)
class Prefix:
    """The values f(0), ..., f(N) of a sequence whose tail is unknown."""

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable):
        vals = tuple(as_rational(v) for v in values)
        if not vals:
            raise ValueError("a prefix needs at least one value")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class FiniteSupportSeq:
    """A sequence that is exactly zero past its stored values.

    Stored in canonical form: trailing zeros trimmed, so equality is
    equality of sequences on all of Z+.
    """

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable = ()):
        vals = [as_rational(v) for v in values]
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "values", tuple(vals))

    @classmethod
    def delta(cls, n: int, scale=1) -> "FiniteSupportSeq":
        _natural(n, "n")
        return cls([0] * n + [scale])

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError(i)
        return self.values[i] if i < len(self.values) else Fraction(0)

    def __iter__(self):
        return iter(self.values)

    @property
    def support(self) -> list[int]:
        return [i for i, v in enumerate(self.values) if v != 0]

    def padded(self, length: int) -> list[Fraction]:
        return [self[i] for i in range(length)]

    def l2_norm2(self) -> Fraction:
        return sum((v * v for v in self.values), Fraction(0))


SeqLike = Union[Prefix, FiniteSupportSeq, Sequence]


def _values(f: SeqLike) -> tuple[Fraction, ...]:
    if isinstance(f, (Prefix, FiniteSupportSeq)):
        return f.values
    return tuple(as_rational(v) for v in f)


def _finite(f) -> FiniteSupportSeq:
    if isinstance(f, FiniteSupportSeq):
        return f
    if isinstance(f, Prefix):
        raise NotFinitelySupported(
            "upper-triangular transforms need a FiniteSupportSeq; a Prefix has an unknown tail"
        )
    if isinstance(f, (list, tuple)):
        return FiniteSupportSeq(f)
    raise NotFinitelySupported(f"cannot treat {type(f).__name__} as finitely supported")


# -- first pair ---------------------------------------------------------------


def bft(f: SeqLike) -> Prefix:
    """Binomial Fourier transform, f(0..N) -> (Lf)(0..N)."""
    vals = _values(f)
    return Prefix(
        sum((binom(x, j) * vals[j] for j in range(x + 1)), Fraction(0)) for x in range(len(vals))
    )


def bft_inv(g: SeqLike) -> Prefix:
    """Inverse binomial Fourier transform (multiplication by L(-1))."""
    vals = _values(g)
    return Prefix(
        sum(((-1) ** (n - l) * binom(n, l) * vals[l] for l in range(n + 1)), Fraction(0))
        for n in range(len(vals))
    )


def exponential_family(a, length: int) -> Prefix:
    """f_a(j) = a^j on 0..length-1; its transform is (1 + a)^x."""
    a = as_rational(a)
    return Prefix(a**j for j in range(length))


def epsilon(n: int) -> FiniteSupportSeq:
    """eps_n(j) = C(n, j), supported on 0..n; bft(eps_n)(x) = K(x, n)."""
    return FiniteSupportSeq(binom(n, j) for j in range(n + 1))


def twisted_basis(n: int, length: int) -> Prefix:
    """(-1)^(n + m) e_n(m) on 0..length-1; bft maps it to delta_n."""
    return Prefix((-1) ** (n + m) * binom(m, n) for m in range(length))


# -- second pair --------------------------------------------------------------


def second_fwd(f) -> FiniteSupportSeq:
    """f -> sum_{y >= x} (-1)^(x + y) C(y, x) f(y); support bound is preserved."""
    vals = _finite(f).values
    top = len(vals)
    return FiniteSupportSeq(
        sum(((-1) ** (x + y) * binom(y, x) * vals[y] for y in range(x, top)), Fraction(0))
        for x in range(top)
    )


def second_inv(g) -> FiniteSupportSeq:
    """g -> sum_{x >= n} C(x, n) g(x), i.e. L* g."""
    vals = _finite(g).values
    top = len(vals)
    return FiniteSupportSeq(
        sum((binom(x, n) * vals[x] for x in range(n, top)), Fraction(0)) for n in range(top)
    )


def membership_image(f) -> tuple[FiniteSupportSeq, bool]:
    """L* f, and whether sum_x K(., x) f(x) lies in H(K).

    For finitely supported f the image is finitely supported, hence in l2,
    so the verdict is always True; it is returned to keep the criterion
    explicit at the call site.
    """
    image = second_inv(f)
    return image, True


def ell2k_inner(f, g) -> Fraction:
    """sum_{x, y} f(x) g(y) K(x, y): the form under which the second pair is unitary."""
    fv, gv = _finite(f).values, _finite(g).values
    return sum(
        (
            fv[x] * gv[y] * pascal_kernel(x, y)
            for x in range(len(fv))
            if fv[x]
            for y in range(len(gv))
            if gv[y]
        ),
        Fraction(0),
    )


def signed_inner(f, g) -> Fraction:
    """sum_{x, y} (-1)^(x + y) f(x) g(y) K(x, y), the signed-kernel form."""
    fv, gv = _finite(f).values, _finite(g).values
    return sum(
        (
            fv[x] * gv[y] * signed_pascal_kernel(x, y)
            for x in range(len(fv))
            if fv[x]
            for y in range(len(gv))
            if gv[y]
        ),
        Fraction(0),
    )


def s_embed(f, N: int) -> Prefix:
    """s(f) = sum_x K(., x) f(x), evaluated on 0..N."""
    fv = _finite(f).values
    _natural(N, "N")
    return Prefix(
        sum((pascal_kernel(t, x) * fv[x] for x in range(len(fv)) if fv[x]), Fraction(0))
        for t in range(N + 1)
    )


def signed_embed(f, N: int) -> Prefix:
    """sum_y K(., y) (-1)^y f(y) on 0..N; isometric from the signed form into H(K)."""
    fv = _finite(f).values
    return s_embed(FiniteSupportSeq((-1) ** y * v for y, v in enumerate(fv)), N)


def hk_norm2_of_embedding(f) -> Fraction:
    """||s(f)||^2 in H(K), i.e. the Pascal quadratic form of f."""
    return ell2k_inner(f, f)


def plancherel_second(f) -> tuple[Fraction, Fraction]:
    """(||s(second_fwd(f))||^2_{H(K)}, ||f||^2_{l2}); the two agree."""
    f = _finite(f)
    return hk_norm2_of_embedding(second_fwd(f)), f.l2_norm2()


def adjoint_pairing_check(f, y0: int) -> Check:
    """Evaluate (A f)(y0) = s(second_fwd(f))(y0) two ways.

    Left: sum_t f^(t) K(y0, t).  Right: the order of summation swapped,
    sum_s f(s) sum_{t <= s} (-1)^(s + t) C(s, t) K(y0, t).
    """
    f = _finite(f)
    _natural(y0, "y0")
    fwd = second_fwd(f)
    lhs = sum((v * pascal_kernel(y0, t) for t, v in enumerate(fwd.values)), Fraction(0))
    rhs = sum(
        (
            v * sum((-1) ** (s + t) * binom(s, t) * pascal_kernel(y0, t) for t in range(s + 1))
            for s, v in enumerate(f.values)
            if v
        ),
        Fraction(0),
    )
    if lhs == rhs:
        return passed(value=lhs)
    return failed(y0=y0, lhs=lhs, rhs=rhs)
