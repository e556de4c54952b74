"""Exact binomial, falling-factorial and q-deformed primitives.

Every scalar in the package is a :class:`fractions.Fraction`; indices are
plain non-negative ``int``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_RATIONAL_RE = re.compile(r"-?[0-9]+(/[0-9]+)?")


def _natural(value: int, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be a non-negative int, got {value!r}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and rational strings to ``Fraction``.

    Floats are refused: they would silently import rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``-?digits(/digits)?`` with no whitespace."""
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"malformed rational: {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(text)


def format_rational(value) -> str:
    """Lowest-terms text form, e.g. ``-3/4`` or ``7``."""
    return str(as_rational(value))


def binom(x: int, n: int) -> int:
    """C(x, n), with C(x, n) = 0 when n > x."""
    return math.comb(_natural(x, "x"), _natural(n, "n"))


def falling(x: int, n: int) -> int:
    """Falling factorial x(x-1)...(x-n+1); 1 for n = 0 and 0 for n > x."""
    return math.perm(_natural(x, "x"), _natural(n, "n"))


def _check_q(q) -> Fraction:
    q = as_rational(q)
    if q == 1:
        raise ValueError("q = 1 is excluded: [x] = (q^x - 1)/(q - 1) is undefined")
    return q


def q_bracket(x: int, q) -> Fraction:
    """The q-integer [x] = (q^x - 1)/(q - 1)."""
    _natural(x, "x")
    q = _check_q(q)
    return (q**x - 1) / (q - 1)


def q_falling(x: int, n: int, q) -> Fraction:
    """[x][x-1]...[x-n+1]; the empty product (n = 0) is 1."""
    _natural(x, "x")
    _natural(n, "n")
    q = _check_q(q)
    out = Fraction(1)
    for k in range(n):
        # factor [x - k] with x - k <= 0 contributes [0] = 0
        if x - k <= 0:
            return Fraction(0)
        out *= q_bracket(x - k, q)
    return out


def q_factorial(n: int, q) -> Fraction:
    """[n]! = [n]_n, with [0]! = 1."""
    return q_falling(n, n, q)


def q_binom(x: int, n: int, q) -> Fraction:
    """Gaussian coefficient [x choose n]_q = [x]_n / [n]!; 0 when n > x."""
    _natural(x, "x")
    _natural(n, "n")
    q = _check_q(q)
    if n > x:
        return Fraction(0)
    return _q_binom_cached(x, n, q)


@lru_cache(maxsize=65536)
def _q_binom_cached(x: int, n: int, q: Fraction) -> Fraction:
    denominator = q_factorial(n, q)
    if denominator == 0:
        # only q = -1 hits this: [2] = 1 + q = 0
        raise ValueError(f"[{n}]! vanishes at q = {q}; the q-binomial is undefined")
    return q_falling(x, n, q) / denominator
