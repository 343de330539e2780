"""Classical (q = 1) sequences via exact truncated exponential generating
functions: Euler, Genocchi, Bernoulli, Frobenius-Euler, twisted variants,
and their higher-order versions.

Every sequence here is extracted from its generating function by exact
truncated-series algebra over Fraction (products, powers, reciprocals);
closed-form literature values appear only in the tests."""

from __future__ import annotations

import math
from fractions import Fraction

from .qcore import DomainError, Poly, to_frac

#: the polynomial argument of the x-polynomials
x = Poly((0, 1), "x")


class ExpSeries:
    """Truncated exponential generating function sum c[n] t^n / n!.

    Coefficients are stored in the factorial-normalized form, so coeff(n)
    returns c[n] directly.  Coefficients may be Fractions or Polys (for
    the e^{xt}-weighted polynomial families); multiplication is the exact
    binomial convolution and everything is exact up to the order."""

    __slots__ = ("order", "c")

    def __init__(self, coeffs, order: int):
        c = list(coeffs)[: order + 1]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.order = order
        self.c = c

    @classmethod
    def exp_linear(cls, a, order: int) -> "ExpSeries":
        """Series of e^{a t}: coefficients a^n."""
        out = []
        pw = a * 0 + 1 if isinstance(a, Poly) else Fraction(1)
        for _ in range(order + 1):
            out.append(pw)
            pw = pw * a
        return cls(out, order)

    def coeff(self, n: int):
        return self.c[n]

    def __mul__(self, other: "ExpSeries") -> "ExpSeries":
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            acc = self.c[0] * other.c[n]
            for i in range(1, n + 1):
                acc = acc + math.comb(n, i) * self.c[i] * other.c[n - i]
            out.append(acc)
        return ExpSeries(out, order)

    def __pow__(self, e: int) -> "ExpSeries":
        if e < 0:
            raise DomainError("negative series power; use reciprocal first")
        result = ExpSeries([Fraction(1)], self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reciprocal(self) -> "ExpSeries":
        a0 = self.c[0]
        if a0 == 0:
            raise DomainError("series reciprocal needs a nonzero constant term")
        inv = [1 / a0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc += math.comb(n, i) * self.c[i] * inv[n - i]
            inv.append(-acc / a0)
        return ExpSeries(inv, self.order)

    def scale(self, s) -> "ExpSeries":
        return ExpSeries([s * c for c in self.c], self.order)

    def shift_t(self) -> "ExpSeries":
        """Multiply by t: the coefficient of t^n/n! becomes n * c[n-1]."""
        out = [Fraction(0)]
        for n in range(1, self.order + 1):
            out.append(n * self.c[n - 1])
        return ExpSeries(out, self.order)


def _euler_base(order: int) -> ExpSeries:
    """Series of 2/(e^t + 1)."""
    ept1 = ExpSeries([Fraction(2)] + [Fraction(1)] * order, order)
    return ept1.reciprocal().scale(Fraction(2))


def _as_xpoly(v) -> Poly:
    return v if isinstance(v, Poly) else Poly((to_frac(v),), "x")


def euler_number(n: int) -> Fraction:
    """E_n, the coefficient of t^n/n! in 2/(e^t + 1)."""
    return _euler_base(n).coeff(n)


def euler_poly(n: int) -> Poly:
    """E_n(x) from the generating function 2 e^{xt}/(e^t + 1)."""
    s = _euler_base(n) * ExpSeries.exp_linear(x, n)
    return _as_xpoly(s.coeff(n))


def higher_euler_number(n: int, r: int = 1) -> Fraction:
    """E_n^{(r)} = E_n^{(r)}(0), from (2/(e^t + 1))^r."""
    return (_euler_base(n) ** r).coeff(n)


def higher_euler_poly(n: int, r: int = 1) -> Poly:
    """E_n^{(r)}(x), from (2/(e^t + 1))^r e^{xt}."""
    s = (_euler_base(n) ** r) * ExpSeries.exp_linear(x, n)
    return _as_xpoly(s.coeff(n))


def genocchi(n: int) -> Fraction:
    """G_n, the coefficient of t^n/n! in 2t/(e^t + 1)."""
    return _euler_base(n).shift_t().coeff(n)


def genocchi_poly(n: int) -> Poly:
    """G_n(x), from 2t e^{xt}/(e^t + 1)."""
    s = (_euler_base(n) * ExpSeries.exp_linear(x, n)).shift_t()
    return _as_xpoly(s.coeff(n))


def higher_genocchi(n: int, r: int = 1) -> Fraction:
    """G_n^{(r)}, from (2t/(e^t + 1))^r; identically zero below index r."""
    if n < r:
        return Fraction(0)
    s = _euler_base(n) ** r
    for _ in range(r):
        s = s.shift_t()
    return s.coeff(n)


def bernoulli(n: int) -> Fraction:
    """B_n, via the reciprocal of the series of (e^t - 1)/t."""
    base = ExpSeries([Fraction(1, k + 1) for k in range(n + 1)], n)
    return base.reciprocal().coeff(n)


def _frobenius_base(u: Fraction, order: int) -> ExpSeries:
    u = to_frac(u)
    if u == 1:
        raise DomainError("Frobenius-Euler numbers are undefined at u = 1")
    etu = ExpSeries([Fraction(1) - u] + [Fraction(1)] * order, order)
    return etu.reciprocal().scale(1 - u)


def frobenius_euler(n: int, u) -> Fraction:
    """H_n(u), the coefficient of t^n/n! in (1 - u)/(e^t - u)."""
    return _frobenius_base(u, n).coeff(n)


def frobenius_euler_poly(n: int, u) -> Poly:
    """H_n(u, x), from the e^{xt}-weighted generating function."""
    s = _frobenius_base(u, n) * ExpSeries.exp_linear(x, n)
    return _as_xpoly(s.coeff(n))


def twisted_euler_classical(n: int, w) -> Fraction:
    """Twisted Euler number E_n(w) = 2/(w + 1) * H_n(-1/w).

    w = 1 recovers the plain Euler numbers; the alternating series
    2 sum (-w)^m m^n provides the independent oracle for |w| < 1."""
    w = to_frac(w)
    if w == 0 or w == -1:
        raise DomainError("twisted Euler numbers need w not in {0, -1}")
    return Fraction(2) / (w + 1) * frobenius_euler(n, -1 / w)


def twisted_genocchi_classical(n: int, w) -> Fraction:
    """Twisted Genocchi number from 2t/(w e^t + 1); the t factor shifts the
    index: the value is n times the twisted Euler number of index n - 1."""
    if n == 0:
        return Fraction(0)
    return n * twisted_euler_classical(n - 1, w)
