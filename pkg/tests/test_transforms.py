import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rational_lists
from pascal_rkhs.transforms import (
    FiniteSupportSeq,
    NotFinitelySupported,
    Prefix,
    adjoint_pairing_check,
    bft,
    bft_inv,
    ell2k_inner,
    epsilon,
    exponential_family,
    membership_image,
    plancherel_second,
    s_embed,
    second_fwd,
    second_inv,
    signed_embed,
    signed_inner,
    twisted_basis,
)

F = Fraction
FS = FiniteSupportSeq


def C(x, n):
    return math.factorial(x) // (math.factorial(n) * math.factorial(x - n)) if 0 <= n <= x else 0


def forward_substitution(g):
    """Solve sum_{j<=x} C(x, j) f(j) = g(x) for f, one row at a time."""
    f = []
    for x, gx in enumerate(g):
        f.append(F(gx) - sum(C(x, j) * f[j] for j in range(x)))
    return f


def back_substitution(f):
    """Solve sum_{x>=n} C(x, n) h(x) = f(n) for h (the upper-triangular L^T system)."""
    n = len(f)
    h = [F(0)] * n
    for k in reversed(range(n)):
        h[k] = F(f[k]) - sum(C(x, k) * h[x] for x in range(k + 1, n))
    return h


# -- worked examples ---------------------------------------------------------


def test_bft_examples():
    assert list(bft([1, 1, 1, 1])) == [1, 2, 4, 8]
    assert list(bft([1, -1, 1, -1])) == [1, 0, 0, 0]
    assert list(bft([0, 0, 1, 0, 0])) == [0, 0, 1, 3, 6]


def test_bft_inv_examples():
    assert list(bft_inv([0, 0, 1, 3, 6])) == [0, 0, 1, 0, 0]
    assert list(bft_inv([1, 2, 4, 8])) == [1, 1, 1, 1]
    c = F(-7, 3)
    assert list(bft_inv([c, 0, 0])) == [c, -c, c]


def test_second_fwd_examples():
    assert second_fwd(FS.delta(2)) == FS([1, -2, 1])
    assert second_fwd(FS.delta(0)) == FS([1])
    assert second_fwd(FS([0, 1, 0])) == FS([-1, 1])


def test_second_inv_examples():
    assert second_inv(FS.delta(3)) == FS([1, 3, 3, 1])
    assert second_inv(FS([1, -2, 1])) == FS.delta(2)
    assert second_inv(FS()) == FS()


def test_ell2k_inner_examples():
    assert ell2k_inner(FS.delta(0), FS.delta(0)) == 1
    assert ell2k_inner(FS.delta(1), FS.delta(1)) == 2
    assert ell2k_inner(FS.delta(0), FS.delta(1)) == 1


def test_signed_inner_examples():
    assert signed_inner(FS.delta(0), FS.delta(0)) == 1
    assert signed_inner(FS.delta(1), FS.delta(1)) == 2
    assert signed_inner(FS.delta(0), FS.delta(1)) == -1


def test_s_embed_examples():
    assert list(s_embed(FS.delta(0), 3)) == [1, 1, 1, 1]
    assert list(s_embed(FS.delta(1), 3)) == [1, 2, 3, 4]
    assert list(s_embed(FS(), 4)) == [0] * 5


def test_plancherel_examples():
    assert plancherel_second(FS.delta(0)) == (1, 1)
    assert plancherel_second(FS.delta(2)) == (1, 1)
    assert plancherel_second(FS([1, 1])) == (2, 2)


def test_adjoint_pairing_examples():
    c = adjoint_pairing_check(FS.delta(0), 0)
    assert c and c.witness["value"] == 1
    c = adjoint_pairing_check(FS.delta(2), 3)
    # s(second_fwd(delta_2)) = e_2, so both sides are C(3, 2)
    assert c and c.witness["value"] == 3


def test_membership_image_examples():
    assert membership_image(FS.delta(0)) == (FS([1]), True)
    assert membership_image(FS.delta(3))[0] == FS([1, 3, 3, 1])
    assert membership_image(FS([1, -1]))[0] == FS([0, -1])


# -- finite support discipline -----------------------------------------------


def test_prefix_rejected_by_upper_transforms():
    p = Prefix([1, 2, 3])
    for fn in (second_fwd, second_inv):
        with pytest.raises(NotFinitelySupported):
            fn(p)
    with pytest.raises(NotFinitelySupported):
        ell2k_inner(p, p)


def test_finite_support_canonical_form():
    assert FS([1, 0, 0]) == FS([1])
    assert FS([0, 0]).values == ()
    assert FS([0, 3, 0, 5]).support == [1, 3]
    assert FS([2])[10] == 0


def test_support_bound_preserved():
    f = FS([F(1, 2), -3, 0, 7])
    assert len(second_fwd(f)) <= 4
    assert len(second_inv(f)) <= 4


def test_prefix_needs_a_value():
    with pytest.raises(ValueError):
        Prefix([])


# -- oracles -----------------------------------------------------------------


@given(rational_lists(1, 20))
def test_bft_against_direct_sum_and_substitution(vals):
    image = list(bft(vals))
    assert image == [sum(C(x, j) * vals[j] for j in range(x + 1)) for x in range(len(vals))]
    assert list(bft_inv(image)) == forward_substitution(image) == vals


@given(rational_lists(0, 16))
def test_second_fwd_solves_upper_system(vals):
    assert list(second_fwd(FS(vals)).padded(len(vals))) == back_substitution(vals)


# -- invariants ----------------------------------------------------------------


@settings(max_examples=60)
@given(rational_lists(1, 64))
def test_bft_round_trips(vals):
    p = Prefix(vals)
    assert bft_inv(bft(p)) == p
    assert bft(bft_inv(p)) == p


@settings(max_examples=60)
@given(rational_lists(0, 32))
def test_second_round_trips(vals):
    f = FS(vals)
    assert second_inv(second_fwd(f)) == f
    assert second_fwd(second_inv(f)) == f


@given(rational_lists(0, 16), rational_lists(0, 16))
def test_second_pair_adjoint_and_isometric(fv, gv):
    f, g = FS(fv), FS(gv)
    gi = second_inv(g)
    assert ell2k_inner(g, second_fwd(f)) == sum(gi[n] * f[n] for n in range(len(f)))
    assert gi.l2_norm2() == ell2k_inner(g, g)


@given(rational_lists(0, 16))
def test_signed_embedding_is_isometric(fv):
    # ||sum_y K(., y) (-1)^y f(y)||^2 in H(K), computed as a Pascal quadratic form
    f = FS(fv)
    twisted = FS((-1) ** y * v for y, v in enumerate(fv))
    assert ell2k_inner(twisted, twisted) == signed_inner(f, f)


def test_signed_embed_values():
    f = FS([F(1, 2), 3])
    assert list(signed_embed(f, 3)) == [F(1, 2) * 1 - 3 * C(t + 1, 1) for t in range(4)]


@given(rational_lists(0, 12))
def test_plancherel_second(vals):
    a, b = plancherel_second(FS(vals))
    assert a == b == sum(v * v for v in vals)


@given(rational_lists(0, 8), st.integers(0, 12))
def test_adjoint_pairing_property(vals, y0):
    assert adjoint_pairing_check(FS(vals), y0)


@given(rational_lists(0, 10))
def test_membership_image_is_transpose_action(vals):
    image, verdict = membership_image(FS(vals))
    assert verdict
    assert list(image.padded(len(vals))) == [
        sum(C(x, n) * vals[x] for x in range(n, len(vals))) for n in range(len(vals))
    ]


@pytest.mark.parametrize("a", [F(1, 2), F(-1, 3), F(2), F(-5, 7)])
def test_exponential_family(a):
    assert list(bft(exponential_family(a, 33))) == [(1 + a) ** x for x in range(33)]


def test_epsilon_images_are_kernel_columns():
    for n in range(17):
        image = bft(epsilon(n).padded(33))
        assert list(image) == [C(x + n, x) for x in range(33)]


def test_twisted_basis_maps_to_delta():
    for n in range(12):
        assert list(bft(twisted_basis(n, 20))) == [int(x == n) for x in range(20)]


def test_kernel_inversion_identity():
    for m in range(41):
        for n in range(41):
            s = sum((-1) ** (n + l) * C(n, l) * C(l + m, l) for l in range(n + 1))
            assert s == C(m, n)


def test_orthogonality_core():
    for n in range(49):
        for m in range(n + 1):
            assert sum((-1) ** (m + j) * C(n, j) * C(j, m) for j in range(m, n + 1)) == (m == n)
