"""Higher-order, twisted, and multiple twisted q-Euler families: closed
forms (exact at a rational q, or symbolic in the rational-function field),
boundary series evaluators, and generating-function comparators.

The closed form for the order-k family with weight h, twist w, and shift x is

    [2]_q^k (1-q)^{-m} sum_{j=0}^{m} C(m,j) (-1)^j q^{xj}
                              / prod_{l=0}^{k-1} (1 + w q^{h+j-l}),

which the fermionic level sums of `padic` approximate p-adically and the
series below approximate for 0 < q < 1."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import qgenocchi as _qgenocchi
from .padic import DivergenceError, SeriesParams, cesaro1_value
from .qcore import (
    DomainError,
    Poly,
    QRat,
    is_zero_scalar,
    q as _qgen,
    q_int,
    q_power,
    to_frac,
)


@dataclass(frozen=True)
class QEulerSpec:
    """Parameters: degree m, integer weight h, order k, integer shift x,
    and rational twist w (w = 1 recovers the untwisted family)."""

    m: int
    h: int
    k: int = 1
    x: int = 0
    w: Fraction = Fraction(1)

    def __post_init__(self):
        if self.m < 0 or self.k < 1 or self.x < 0:
            raise DomainError("need m >= 0, k >= 1, x >= 0")


def _normalize_q(qv):
    """Returns (qv, symbolic).  Symbolic computation happens in QRat."""
    if qv is None:
        return QRat(_qgen), True
    if isinstance(qv, Poly):
        return QRat(qv), True
    if isinstance(qv, QRat):
        return qv, True
    qf = to_frac(qv)
    if qf in (0, 1, -1):
        raise DomainError("exact mode needs q outside {0, 1, -1}")
    return qf, False


def _denominator_product(qv, w: Fraction, h: int, j: int, k: int):
    """prod_{l=0}^{k-1} (1 + w q^{h+j-l}), guarding vanishing factors."""
    acc = qv ** 0
    for l in range(k):
        factor = w * q_power(qv, h + j - l) + 1
        if is_zero_scalar(factor):
            raise DomainError(
                f"vanishing denominator factor 1 + w q^({h + j - l}) at j={j}, l={l}")
        acc = acc * factor
    return acc


def qeuler_hk(spec: QEulerSpec, qv=None):
    """Closed form of the order-k q-Euler value E_m^{(h,k)}(x; w).

    Pass a Fraction q for an exact value, or omit q (or pass the symbolic
    generator) for the reduced rational function in q."""
    qv, _ = _normalize_q(qv)
    w = to_frac(spec.w)
    acc = qv * 0
    for j in range(spec.m + 1):
        den = _denominator_product(qv, w, spec.h, j, spec.k)
        term = math.comb(spec.m, j) * (-1) ** j * q_power(qv, spec.x * j) / den
        acc = acc + term
    scale = q_int(2, qv) ** spec.k
    if spec.m:
        scale = scale * q_power(1 - qv, -spec.m)
    return scale * acc


def qeuler_twisted(n: int, w, qv=None):
    """Twisted q-Euler number:
    [2]_q (1-q)^{-n} sum_j C(n,j) (-1)^j / (1 + q^{j+1} w).

    Coincides with the order-1, weight-1 family at x = 0."""
    if n < 0:
        raise DomainError("need n >= 0")
    qv, _ = _normalize_q(qv)
    w = to_frac(w)
    acc = qv * 0
    for j in range(n + 1):
        factor = w * q_power(qv, j + 1) + 1
        if is_zero_scalar(factor):
            raise DomainError(f"vanishing denominator 1 + w q^({j + 1}) at j={j}")
        acc = acc + math.comb(n, j) * (-1) ** j / factor
    scale = q_int(2, qv)
    if n:
        scale = scale * q_power(1 - qv, -n)
    return scale * acc


def _series_mode(w: Fraction, sp: SeriesParams):
    if abs(w) > 1:
        raise DivergenceError("series diverges for |w| > 1")
    if w == -1:
        raise DivergenceError("positively divergent series (twist w = -1)")
    boundary = w == 1
    if boundary and sp.mode == "direct":
        raise DivergenceError("boundary alternating series: use cesaro1")
    return boundary


def _bracket_series_terms(m: int, k: int, x: int, w: Fraction, qf: Fraction, M: int):
    """Terms C(k+n-1, n)_q (-w)^n [n+x]_q^m for n = 0..M-1, with the
    Gaussian weight and the bracket updated incrementally."""
    terms = []
    c = Fraction(1)
    br = (1 - qf ** x) / (1 - qf)
    qpow = qf ** x
    sign = Fraction(1)
    for n in range(M):
        if n > 0:
            c *= (1 - qf ** (k + n - 1)) / (1 - qf ** n)
            br += qpow
            qpow *= qf
            sign *= -w
        terms.append(c * sign * br ** m)
    return terms


def _gauss_weight_bound(k: int, qf: Fraction) -> Fraction:
    """C(k+n-1, n)_q increases in n to 1/prod_{i=1}^{k-1}(1 - q^i)."""
    out = Fraction(1)
    for i in range(1, k):
        out /= 1 - qf ** i
    return out


def qeuler_hk_series(spec: QEulerSpec, qv, sp: SeriesParams) -> tuple[Fraction, Fraction]:
    """Series route for the weight h = k - 1 family:
    [2]_q^k sum_n C(k+n-1, n)_q (-w)^n [n+x]_q^m.

    Direct mode needs |w| < 1 and returns an exact geometric tail bound;
    |w| = 1 is the boundary case and needs cesaro1.  Returns (value, bound)."""
    if spec.h != spec.k - 1:
        raise DomainError("the series expansion exists only for h = k - 1")
    qf = to_frac(qv)
    if not 0 < qf < 1:
        raise DomainError("series mode needs 0 < q < 1")
    w = to_frac(spec.w)
    boundary = _series_mode(w, sp)
    terms = _bracket_series_terms(spec.m, spec.k, spec.x, w, qf, sp.M)
    pref = (1 + qf) ** spec.k
    partials = []
    s = Fraction(0)
    for t in terms:
        s += t
        partials.append(s)
    if boundary or sp.mode == "cesaro1":
        value, gap = cesaro1_value(partials)
        return pref * value, pref * gap
    aw = abs(w)
    tail = (_gauss_weight_bound(spec.k, qf) * q_power(1 - qf, -spec.m)
            * aw ** sp.M / (1 - aw))
    return pref * s, pref * tail


def qeuler_twisted_hk_series(spec: QEulerSpec, qv, sp: SeriesParams):
    """Series route for the multiple twisted family; identical expansion,
    with the twist taken from the spec (w = 1 reduces to the untwisted
    boundary series)."""
    return qeuler_hk_series(spec, qv, sp)


def _truncated_exp(a: Fraction, t: Fraction, terms: int, inv_fact) -> Fraction:
    acc = Fraction(0)
    pw = Fraction(1)
    for j in range(terms):
        acc += inv_fact[j] * pw
        pw *= a * t
    return acc


def gf_eval(kind: str, k: int, x: int, w, qv, t, sp: SeriesParams,
            t_terms: int = 8) -> tuple[Fraction, Fraction]:
    """Compare the two faces of a generating function at a rational point t.

    kind "fqk":  lhs = [2]_q^k sum_n C(k+n-1,n)_q (-w)^n e^{[n+x]_q t}
                 rhs = sum_{m<T} E-closed-form * t^m/m!
    kind "hqk"/"hqkw": the order-k Genocchi generating function, with its
                 t^k prefactor and vanishing low coefficients (x must be 0;
                 "hqk" forces w = 1).

    Exponentials are truncated exact series in t; the boundary n-sum is
    evaluated with the cesaro1 smoothing.  Returns (lhs, rhs)."""
    if kind not in ("fqk", "hqk", "hqkw"):
        raise DomainError(f"unknown generating function kind {kind!r}")
    qf = to_frac(qv)
    if not 0 < qf < 1:
        raise DomainError("generating functions are evaluated for 0 < q < 1")
    t = to_frac(t)
    w = Fraction(1) if kind == "hqk" else to_frac(w)
    if kind in ("hqk", "hqkw"):
        if x != 0:
            raise DomainError("the Genocchi generating functions have no shift")
    _series_mode(w, SeriesParams(sp.M, "cesaro1"))
    inv_fact = [Fraction(1, math.factorial(j)) for j in range(t_terms + k + 1)]

    c = Fraction(1)
    br = (1 - qf ** x) / (1 - qf)
    qpow = qf ** x
    sign = Fraction(1)
    partials = []
    s = Fraction(0)
    for n in range(sp.M):
        if n > 0:
            c *= (1 - qf ** (k + n - 1)) / (1 - qf ** n)
            br += qpow
            qpow *= qf
            sign *= -w
        s += c * sign * _truncated_exp(br, t, t_terms, inv_fact)
        partials.append(s)
    core, _ = cesaro1_value(partials)
    pref = (1 + qf) ** k

    if kind == "fqk":
        lhs = pref * core
        rhs = Fraction(0)
        tp = Fraction(1)
        for m in range(t_terms):
            val = qeuler_hk(QEulerSpec(m=m, h=k - 1, k=k, x=x, w=w), qf)
            rhs += val * tp * inv_fact[m]
            tp *= t
        return lhs, rhs

    lhs = pref * t ** k * core
    rhs = Fraction(0)
    tp = Fraction(1)
    for n in range(k + t_terms):
        if n >= k:
            val = _qgenocchi.qgenocchi_hk(
                _qgenocchi.QGenocchiSpec(n=n - k, h=k - 1, k=k, w=w), qf)
            rhs += val * tp * inv_fact[n]
        tp *= t
    return lhs, rhs
