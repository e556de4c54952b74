"""Identity suites driven by ``pascal-rkhs verify``.

Each check family is a function ``(scale, rng) -> Check``.  A family's
scale is ``min(max_n, cap)``: some families are quadratic or worse in the
index and would not finish at max_n = 48.  Random inputs come from a
fixed-seed generator so reports are byte-for-byte reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import hurwitz, hypergroup, kernels, operators, rkhs, transforms
from .check import Check, failed, passed
from .combinatorics import binom, format_rational, q_binom
from .transforms import FiniteSupportSeq, Prefix

SEED = 20130101


def random_rational(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_seq(rng: random.Random, length: int) -> list[Fraction]:
    return [random_rational(rng) for _ in range(length)]


@dataclass(frozen=True)
class Family:
    id: str
    anchor: str
    cap: int
    run: Callable[[int, random.Random], Check]


def _first_failure(items):
    for item in items:
        if not item:
            return item
    return None


# -- families -----------------------------------------------------------------


def _orthogonality(n_max, rng):
    for n in range(n_max + 1):
        for m in range(n + 1):
            s = sum((-1) ** (m + j) * binom(n, j) * binom(j, m) for j in range(m, n + 1))
            if s != (m == n):
                return failed(m=m, n=n, sum=s)
    return passed()


def _basis_images(n_max, rng):
    length = n_max + 1
    for n in range(n_max + 1):
        if list(transforms.bft(FiniteSupportSeq.delta(n).padded(length))) != [
            binom(x, n) for x in range(length)
        ]:
            return failed(image="delta_n -> e_n", n=n)
        if list(transforms.bft(transforms.twisted_basis(n, length))) != [
            int(x == n) for x in range(length)
        ]:
            return failed(image="twisted e_n -> delta_n", n=n)
    return passed()


def _kernel_inversion(n_max, rng):
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            s = sum(
                (-1) ** (n + l) * binom(n, l) * kernels.pascal_kernel(l, m) for l in range(n + 1)
            )
            if s != binom(m, n):
                return failed(m=m, n=n, sum=s)
    return passed()


def _diagonal(n_max, rng):
    for x in range(n_max + 1):
        if kernels.pascal_kernel(x, x) != binom(2 * x, x):
            return failed(x=x)
        for y in range(n_max + 1):
            c = kernels.cauchy_schwarz_check(x, y)
            if not c:
                return c
    return passed()


def _bft_roundtrip(n_max, rng):
    for _ in range(20):
        p = Prefix(random_seq(rng, rng.randint(1, n_max + 1)))
        if transforms.bft_inv(transforms.bft(p)) != p or transforms.bft(transforms.bft_inv(p)) != p:
            return failed(prefix=[format_rational(v) for v in p])
    return passed(trials=20)


def _worked_images(n_max, rng):
    length = n_max + 1
    if list(transforms.bft([1] * length)) != [2**x for x in range(length)]:
        return failed(image="1 -> 2^x")
    if list(transforms.bft([(-1) ** j for j in range(length)])) != [int(x == 0) for x in range(length)]:
        return failed(image="(-1)^j -> delta_0")
    for a in (Fraction(1, 2), Fraction(-1, 3), Fraction(2)):
        got = transforms.bft(transforms.exponential_family(a, length))
        if list(got) != [(1 + a) ** x for x in range(length)]:
            return failed(image="a^j -> (1+a)^x", a=a)
    return passed()


def _membership_shadow(n_max, rng):
    for _ in range(20):
        coeffs = random_seq(rng, rng.randint(1, n_max + 1))
        g = rkhs.RkhsElement(coeffs)
        values = g.values(len(coeffs) + 7)
        inv = list(transforms.bft_inv(values))
        want = [g.coeffs[i] for i in range(len(inv))]
        if inv != want:
            return failed(coeffs=[format_rational(c) for c in coeffs])
    return passed(trials=20)


def _reproducing(n_max, rng):
    for lam in (1, Fraction(1, 2), 2):
        for _ in range(10):
            g = rkhs.RkhsElement(random_seq(rng, rng.randint(1, n_max + 1)), lam)
            x = rng.randint(0, 2 * n_max)
            c = rkhs.reproducing_check(g, x)
            if not c:
                return c
    return passed()


def _growth_bound(n_max, rng):
    for _ in range(10):
        g = rkhs.RkhsElement(random_seq(rng, rng.randint(1, min(n_max, 10) + 1)))
        c = rkhs.growth_bound_check(g, 2 * n_max)
        if not c:
            return c
    return passed()


def _group_law(n_max, rng):
    pairs = [(random_rational(rng), random_rational(rng)) for _ in range(10)]
    pairs += [(0, 1), (1, -1), (Fraction(1, 2), Fraction(-1, 2))]
    return _first_failure(operators.verify_semigroup(l, m, n_max) for l, m in pairs) or passed()


def _exponential(n_max, rng):
    for lam in (0, 1, -1, Fraction(1, 2), Fraction(7, 3)):
        if operators.exp_nilpotent(lam, n_max) != operators.build_L(lam, n_max):
            return failed(lam=lam)
    return passed()


def _conjugation(n_max, rng):
    pairs = [(2, 3), (Fraction(1, 2), -1), (Fraction(-2, 5), Fraction(7, 3))]
    return _first_failure(operators.zadeh_conjugation_check(l, m, n_max) for l, m in pairs) or passed()


def _factorization(n_max, rng):
    checks = (operators.verify_factorization(lam, n_max) for lam in (1, Fraction(1, 2), 2, Fraction(-1, 3)))
    return _first_failure(checks) or passed()


def _pascal_minors(n_max, rng):
    ok, minors = kernels.is_positive_definite(kernels.gram_matrix(kernels.KernelKind.pascal(), n_max))
    if ok and all(m == 1 for m in minors):
        return passed()
    return failed(minors=minors)


def _signed_positive(n_max, rng):
    ok, minors = kernels.is_positive_definite(kernels.gram_matrix(kernels.KernelKind.signed(), n_max))
    return passed() if ok else failed(minors=minors)


def _coproduct(n_max, rng):
    for m in range(n_max + 1):
        for n in range(n_max + 1):
            oracle = hypergroup.coproduct_oracle(m, n)
            formula = hypergroup.coproduct_formula(m, n)
            if oracle.coeffs != formula.coeffs:
                return failed(m=m, n=n)
    return passed()


def _e1_rule(n_max, rng):
    for n in range(n_max + 1):
        c = hypergroup.coproduct_oracle(1, n)
        want = {n: n, n + 1: n + 1} if n else {1: 1}
        if {k: v for k, v in c.coeffs.items() if v} != want:
            return failed(n=n)
    return passed()


def _intertwining(n_max, rng):
    for _ in range(10):
        f = random_seq(rng, n_max + 1 + rng.randint(0, 4))
        c = hurwitz.verify_intertwining(f, n_max)
        if not c:
            return c
    return passed(trials=10)


def _script_h_basis(n_max, rng):
    degree = 2 * n_max
    for n in range(n_max + 1):
        image = hurwitz.script_h([binom(x, n) for x in range(degree + 1)], degree)
        if image != hurwitz.PowerSeries.monomial(n, degree, Fraction(1, math.factorial(n))):
            return failed(n=n)
    return passed()


def _g_a(n_max, rng):
    report = hurwitz.g_a_family_check(Fraction(1, 2), 8, 40)
    if report.ok:
        return passed(max_deviation=report.max_deviation)
    return failed(max_deviation=report.max_deviation)


def _k2_basis(n_max, rng):
    for zeta, z in ((1, 1), (Fraction(1, 2), -3), (Fraction(-2, 3), Fraction(5, 7))):
        got = hurwitz.k2_from_basis(zeta, z, n_max)
        want = kernels.k2_kernel_truncated(zeta, z, n_max)
        if got != want:
            return failed(zeta=zeta, z=z, basis=got, kernel=want)
    return passed()


def _second_pair(n_max, rng):
    for _ in range(20):
        f = FiniteSupportSeq(random_seq(rng, rng.randint(0, n_max + 1)))
        g = FiniteSupportSeq(random_seq(rng, rng.randint(0, n_max + 1)))
        if transforms.second_inv(transforms.second_fwd(f)) != f:
            return failed(identity="inv(fwd(f)) = f")
        if transforms.second_fwd(transforms.second_inv(f)) != f:
            return failed(identity="fwd(inv(f)) = f")
        gi = transforms.second_inv(g)
        lhs = transforms.ell2k_inner(g, transforms.second_fwd(f))
        rhs = sum((gi[n] * f[n] for n in range(len(f))), Fraction(0))
        if lhs != rhs:
            return failed(identity="adjointness", lhs=lhs, rhs=rhs)
        if gi.l2_norm2() != transforms.ell2k_inner(g, g):
            return failed(identity="isometry")
    return passed(trials=20)


def _plancherel(n_max, rng):
    for _ in range(20):
        f = FiniteSupportSeq(random_seq(rng, rng.randint(0, n_max + 1)))
        a, b = transforms.plancherel_second(f)
        if a != b:
            return failed(hk=a, l2=b)
    return passed(trials=20)


def _bft_parseval(n_max, rng):
    for _ in range(20):
        f = random_seq(rng, rng.randint(1, n_max + 1))
        image = transforms.bft(f + [0] * 4)
        g = rkhs.from_values(image)
        if g.norm2() != sum((v * v for v in f), Fraction(0)):
            return failed(f=[format_rational(v) for v in f])
    return passed(trials=20)


def _adjoint_pairing(n_max, rng):
    for _ in range(10):
        f = FiniteSupportSeq(random_seq(rng, rng.randint(0, n_max + 1)))
        c = transforms.adjoint_pairing_check(f, rng.randint(0, n_max + 4))
        if not c:
            return c
    return passed()


def _q_positive(n_max, rng):
    for q in (2, Fraction(1, 2), Fraction(3, 2), Fraction(-1, 2)):
        ok, minors = kernels.is_positive_definite(kernels.gram_matrix(kernels.KernelKind.q(q), n_max))
        if not ok:
            return failed(q=q, minors=minors)
    return passed()


def _q_pascal(n_max, rng):
    for q in (2, Fraction(1, 2)):
        q = Fraction(q)
        for x in range(n_max + 1):
            for n in range(1, x + 2):
                lhs = q_binom(x + 1, n, q)
                rhs = q**n * q_binom(x, n, q) + q_binom(x, n - 1, q)
                if lhs != rhs:
                    return failed(q=q, x=x, n=n)
    return passed()


FAMILIES: dict[str, list[Family]] = {
    "orthogonality": [
        Family("orthogonality.alternating_sum", "alternating binomial orthogonality", 48, _orthogonality),
        Family("orthogonality.basis_images", "delta_n -> e_n and twisted e_n -> delta_n", 32, _basis_images),
    ],
    "inversion": [
        Family("inversion.kernel", "alternating sum of K(l, m) gives C(m, n)", 40, _kernel_inversion),
        Family("inversion.diagonal", "K(x, x) = C(2x, x) and Cauchy-Schwarz", 64, _diagonal),
        Family("inversion.bft_roundtrip", "binomial Fourier transform inverse", 64, _bft_roundtrip),
        Family("inversion.worked_images", "images of 1, (-1)^j and a^j", 32, _worked_images),
        Family("inversion.membership", "inverse transform recovers basis coefficients", 16, _membership_shadow),
        Family("inversion.reproducing", "reproducing property in H(K_lambda)", 16, _reproducing),
        Family("inversion.growth_bound", "|f(x)|^2 <= ||f||^2 C(2x, x)", 24, _growth_bound),
    ],
    "semigroup": [
        Family("semigroup.group_law", "L(lambda) L(mu) = L(lambda + mu)", 32, _group_law),
        Family("semigroup.exponential", "L(lambda) = exp(lambda A)", 32, _exponential),
        Family("semigroup.conjugation", "L(lambda) = D(lambda) L(1) D(lambda)^-1", 16, _conjugation),
    ],
    "factorization": [
        Family("factorization.lambda", "K_lambda = L(lambda) L(lambda)^T", 24, _factorization),
        Family("factorization.pascal_minors", "Pascal Gram leading minors all equal 1", 32, _pascal_minors),
        Family("factorization.signed_positive", "signed Pascal kernel is positive definite", 32, _signed_positive),
    ],
    "coproduct": [
        Family("coproduct.formula_vs_oracle", "structure constants of e_m e_n", 12, _coproduct),
        Family("coproduct.e1_rule", "e_1 e_n = n e_n + (n+1) e_(n+1)", 16, _e1_rule),
    ],
    "hurwitz": [
        Family("hurwitz.intertwining", "H(f) = e^z H(bft_inv f)", 32, _intertwining),
        Family("hurwitz.script_h_basis", "e^-z H(e_n) = z^n / n!", 16, _script_h_basis),
        Family("hurwitz.g_a", "second transform of a^x/x! is e^-a a^x/x!", 8, _g_a),
        Family("hurwitz.k2_basis", "K2 from the monomial basis z^n/n!", 24, _k2_basis),
    ],
    "plancherel": [
        Family("plancherel.second", "||s(f^)||^2 = ||f||^2", 12, _plancherel),
        Family("plancherel.second_pair", "second pair: inverses, adjoint, isometry", 16, _second_pair),
        Family("plancherel.bft_parseval", "||bft f||_H(K) = ||f||_l2", 32, _bft_parseval),
        Family("plancherel.adjoint_pairing", "order-swapped evaluation of s(f^)(y0)", 8, _adjoint_pairing),
    ],
    "qkernel": [
        Family("qkernel.positive_definite", "q-kernel Gram matrices positive definite", 16, _q_positive),
        Family("qkernel.q_pascal", "q-Pascal recurrence", 32, _q_pascal),
    ],
}

SUITES = ("all",) + tuple(FAMILIES)


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def run_suite(suite: str, max_n: int) -> dict:
    """Run a suite and return the report as a JSON-ready dict."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    names = list(FAMILIES) if suite == "all" else [suite]
    checks = []
    for name in names:
        for fam in FAMILIES[name]:
            scale = min(max_n, fam.cap)
            rng = random.Random(f"{SEED}:{fam.id}")
            try:
                result = fam.run(scale, rng)
            except ArithmeticError as exc:
                result = failed(error=f"{type(exc).__name__}: {exc}")
            entry = {
                "id": fam.id,
                "paper_anchor": fam.anchor,
                "scale": scale,
                "status": "pass" if result else "fail",
            }
            if not result:
                entry["witness"] = _jsonable(result.witness)
            checks.append(entry)
    checks.sort(key=lambda c: c["id"])
    n_pass = sum(c["status"] == "pass" for c in checks)
    return {
        "suite": suite,
        "max_n": max_n,
        "checks": checks,
        "summary": {"total": len(checks), "passed": n_pass, "failed": len(checks) - n_pass},
    }
