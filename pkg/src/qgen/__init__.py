"""Exact-arithmetic engine for Gaussian binomials, classical and
higher-order Euler/Genocchi numbers, and the q-extended and twisted
q-Euler / q-Genocchi families, cross-verified by independent routes
(closed-form finite sums, regularized series, brute-force fermionic
p-adic integral sums, and exact symbolic q -> 1 limits)."""

from .qcore import (
    DomainError,
    Poly,
    QRat,
    Scalar,
    q,
    q_sym,
    to_frac,
    parse_rat,
    rat_str,
    q_int,
    q_bracket_neg,
    q_factorial,
    gauss_binom,
    gauss_binom_alt,
    gauss_binom_factorial,
    gauss_binom_compositions,
    pochhammer_q,
    inv_pochhammer_coeff,
    pochhammer_b_coeffs,
)

__version__ = "0.1.0"
