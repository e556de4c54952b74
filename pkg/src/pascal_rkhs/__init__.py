"""Exact arithmetic for the reproducing kernel Hilbert space of the Pascal kernel.

K(x, y) = C(x + y, x) on Z+ x Z+, with orthonormal basis e_n(x) = C(x, n).
All values are ``fractions.Fraction``; nothing is rounded except inside
:func:`hurwitz.g_a_family_check`, which compares a truncated series with
``math.exp``.
"""

from .combinatorics import binom, falling, format_rational, parse_rational, q_binom, q_bracket
from .kernels import (
    GramMatrix,
    KernelKind,
    cauchy_schwarz_check,
    gram_matrix,
    is_positive_definite,
    k2_kernel_truncated,
    lambda_kernel,
    pascal_kernel,
    q_kernel,
)
from .transforms import (
    FiniteSupportSeq,
    Prefix,
    bft,
    bft_inv,
    ell2k_inner,
    s_embed,
    second_fwd,
    second_inv,
)
from .operators import TriangularMatrix, build_A, build_D, build_L, build_M, exp_nilpotent
from .rkhs import RkhsElement, evaluate, inner, kernel_section, membership_diagnostic
from .hurwitz import PowerSeries, hurwitz_series, script_h
from .hypergroup import coproduct_formula, coproduct_oracle

__version__ = "0.1.0"
