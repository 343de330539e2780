"""Exact scalars, polynomials and rational functions in q, and the
q-combinatorial primitives built on them.

All arithmetic is exact: scalars are `fractions.Fraction`, polynomials are
dense coefficient tuples over Fraction (lowest degree first), and rational
functions are kept fully reduced with a monic denominator, so equality is
structural and evaluation at an admissible rational point (including the
q -> 1 limit of a reduced quotient) is total and exact.

Every q-primitive is generic over the evaluation domain: pass a Fraction
for a fixed rational q, or the symbolic generator (`q` / `QRat(q)`) to get
a polynomial or rational function in q.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union


class DomainError(ValueError):
    """An operation was evaluated outside its mathematical domain."""


def to_frac(v) -> Fraction:
    """Coerce an int, Fraction, or "num/den" string to an exact rational."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return parse_rat(v)
    raise TypeError(f"cannot interpret {v!r} as an exact rational")


def parse_rat(text: str) -> Fraction:
    """Parse "num/den" or an integer literal."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad rational literal: {text!r}") from exc


def rat_str(v) -> str:
    """Canonical rendering: "num/den", with the "/den" omitted when den == 1."""
    v = to_frac(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def binom_int(n: int, k: int) -> int:
    """Ordinary binomial coefficient over the integers."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling(n: int, r: int) -> int:
    """Falling factorial n(n-1)...(n-r+1)."""
    out = 1
    for i in range(r):
        out *= n - i
    return out


class Poly:
    """Dense univariate polynomial over Fraction; coefficient i is the
    coefficient of var**i.  Normalized: no trailing zero coefficients, so
    the empty tuple is the zero polynomial.  Immutable and hashable."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "q"):
        cs = [to_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c, var: str = "q") -> "Poly":
        return cls((to_frac(c),), var)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise DomainError(f"{self} is not a constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def _join_var(self, other: "Poly") -> str:
        if self.var == other.var or other.is_constant:
            return self.var
        if self.is_constant:
            return other.var
        raise ValueError(f"mixed variables {self.var!r} and {other.var!r}")

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,), self.var)
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly((other,), self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, "poly"))

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return Poly((-c for c in self.coeffs), self.var)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        var = self._join_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out, var)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        var = self._join_var(other)
        if self.is_zero or other.is_zero:
            return Poly((), var)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out, var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative power of a Poly; promote to QRat")
        result = Poly((1,), self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        var = self._join_var(other)
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        dlead = other.coeffs[-1]
        dd = other.degree
        while len(rem) - 1 >= dd and rem:
            shift = len(rem) - 1 - dd
            factor = rem[-1] / dlead
            quo[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quo, var), Poly(rem, var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        """Division that must leave no remainder."""
        quo, rem = divmod(self, other)
        if not rem.is_zero:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return quo

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Poly((c / lead for c in self.coeffs), self.var)

    def __call__(self, point):
        """Evaluate by Horner's rule.  `point` may be a Fraction (exact
        evaluation), a Poly (composition), or a QRat."""
        if isinstance(point, (int, str)):
            point = to_frac(point)
        acc = point * 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def shifted(self, a) -> "Poly":
        """Substitute var -> var + a."""
        return self(Poly((to_frac(a), Fraction(1)), self.var))

    def coeff_strings(self) -> list[str]:
        """Canonical JSON form: coefficient strings, lowest degree first."""
        return [rat_str(c) for c in self.coeffs]

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(rat_str(c))
            else:
                mon = self.var if i == 1 else f"{self.var}^{i}"
                if c == 1:
                    parts.append(mon)
                elif c == -1:
                    parts.append(f"-{mon}")
                else:
                    parts.append(f"{rat_str(c)}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic polynomial GCD over the rationals (Euclid)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


class QRat:
    """Reduced rational function num/den over Fraction coefficients.

    Invariants: den is nonzero, monic, and coprime to num, so structural
    equality is semantic equality and evaluation at q0 with den(q0) != 0
    is exact.  In particular a quotient whose q -> 1 limit exists reduces
    to a form with den(1) != 0, making the limit a plain evaluation."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if not isinstance(num, Poly):
            num = Poly((to_frac(num),)) if not isinstance(num, (list, tuple)) else Poly(num)
        if not isinstance(den, Poly):
            den = Poly((to_frac(den),)) if not isinstance(den, (list, tuple)) else Poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator in rational function")
        if num.is_zero:
            den = Poly((1,), den.var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.coeffs[-1]
            if lead != 1:
                num = num * (1 / lead)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QRat is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, QRat):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return QRat(other if isinstance(other, Poly) else Poly((to_frac(other),)))
        return None

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise DomainError(f"{self} is not a constant")
        return self.num.constant_value() / self.den.constant_value()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs, "qrat"))

    def __bool__(self):
        return not self.is_zero

    def __neg__(self):
        return QRat(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        if e >= 0:
            return QRat(self.num ** e, self.den ** e)
        if self.is_zero:
            raise ZeroDivisionError("negative power of zero")
        return QRat(self.den ** (-e), self.num ** (-e))

    def evaluate(self, point) -> Fraction:
        """Exact evaluation at a rational point with den(point) != 0."""
        point = to_frac(point)
        dv = self.den(point)
        if dv == 0:
            raise DomainError(f"pole at q = {rat_str(point)}")
        return self.num(point) / dv

    def at_one(self) -> Fraction:
        """Exact q -> 1 limit of the reduced quotient."""
        return self.evaluate(Fraction(1))

    def to_obj(self):
        """Serialization contract: {"num": [...], "den": [...]}, lowest
        degree first; constants collapse to the plain rational string."""
        if self.is_constant:
            return rat_str(self.constant_value())
        return {"num": self.num.coeff_strings(), "den": self.den.coeff_strings()}

    def __str__(self):
        if self.den == Poly((1,)):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"QRat({self.num!r}, {self.den!r})"


#: the symbolic generator as a polynomial, and embedded in the rational-function field
q = Poly((0, 1), "q")
q_sym = QRat(q)

Scalar = Union[Fraction, Poly, QRat]


def is_zero_scalar(v) -> bool:
    if isinstance(v, (Poly, QRat)):
        return v.is_zero
    return to_frac(v) == 0


def q_power(qv, e: int):
    """qv**e for any integer e, promoting a Poly base to QRat when e < 0."""
    if e >= 0:
        return qv ** e
    if isinstance(qv, Poly):
        return QRat(Poly((1,), qv.var), qv ** (-e))
    if isinstance(qv, QRat):
        return qv ** e
    qf = to_frac(qv)
    if qf == 0:
        raise DomainError("negative power of q = 0")
    return qf ** e


def _domain_zero(qv):
    if isinstance(qv, (Poly, QRat)):
        return qv * 0
    return Fraction(0)


def q_int(n: int, qv=None):
    """[n]_q = (1 - q^n)/(1 - q) = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise DomainError("q-integer needs n >= 0")
    if qv is None:
        qv = q
    if not isinstance(qv, (Poly, QRat)):
        qf = to_frac(qv)
        if qf == 1:
            return Fraction(n)
        return (1 - qf ** n) / (1 - qf)
    acc = _domain_zero(qv)
    pw = qv ** 0
    for _ in range(n):
        acc = acc + pw
        pw = pw * qv
    return acc


def q_bracket_neg(x: int, qv=None):
    """[x]_{-q} = (1 - (-q)^x)/(1 + q)."""
    if x < 0:
        raise DomainError("[x]_{-q} needs x >= 0")
    if qv is None:
        qv = q
    if not isinstance(qv, (Poly, QRat)):
        qf = to_frac(qv)
        if qf == -1:
            raise DomainError("[x]_{-q} undefined at q = -1")
        return (1 - (-qf) ** x) / (1 + qf)
    num = 1 - (-qv) ** x
    den = 1 + qv
    if isinstance(qv, Poly):
        # 1 - (-q)^x is always divisible by 1 + q
        return num.exact_div(den)
    return num / den


def q_factorial(n: int, qv=None):
    """[n]_q! = [n]_q [n-1]_q ... [1]_q, with the empty product equal to 1."""
    if qv is None:
        qv = q
    acc = qv ** 0
    for i in range(1, n + 1):
        acc = acc * q_int(i, qv)
    return acc


def gauss_binom(n: int, k: int, qv=None):
    """Gaussian binomial coefficient, computed by the additive recursion
    C(n+1,k) = C(n,k-1) + q^k C(n,k) with a per-call row table."""
    if qv is None:
        qv = q
    if k < 0 or k > n:
        return _domain_zero(qv)
    one = qv ** 0
    row = [one]
    qpows = [one]
    for m in range(1, n + 1):
        qpows.append(qpows[-1] * qv)
        prev = row
        row = [one]
        for j in range(1, min(m, k) + 1):
            left = prev[j - 1]
            if j < len(prev):
                row.append(left + qpows[j] * prev[j])
            else:
                row.append(left)
    return row[k]


def gauss_binom_triangle(n_max: int, qv=None, alt: bool = False) -> list:
    """All Gaussian binomials up to n_max in one recursion pass; returns
    rows[n][k].  alt=True uses the mirrored recursion form."""
    if qv is None:
        qv = q
    one = qv ** 0
    qpows = [one]
    for _ in range(n_max):
        qpows.append(qpows[-1] * qv)
    rows = [[one]]
    for m in range(1, n_max + 1):
        prev = rows[-1]
        row = [one]
        for j in range(1, m):
            if alt:
                row.append(qpows[m - j] * prev[j - 1] + prev[j])
            else:
                row.append(prev[j - 1] + qpows[j] * prev[j])
        row.append(one)
        rows.append(row)
    return rows


def gauss_binom_alt(n: int, k: int, qv=None):
    """Gaussian binomial by the mirrored recursion
    C(n+1,k) = q^(n+1-k) C(n,k-1) + C(n,k)."""
    if qv is None:
        qv = q
    if k < 0 or k > n:
        return _domain_zero(qv)
    one = qv ** 0
    qpows = [one]
    for _ in range(n):
        qpows.append(qpows[-1] * qv)
    row = [one]
    for m in range(1, n + 1):
        prev = row
        row = [one]
        for j in range(1, min(m, k) + 1):
            left = qpows[m - j] * prev[j - 1]
            if j < len(prev):
                row.append(left + prev[j])
            else:
                row.append(left)
    return row[k]


def gauss_binom_factorial(n: int, k: int, qv=None):
    """Gaussian binomial as the q-factorial quotient [n]!/([n-k]! [k]!)."""
    if qv is None:
        qv = q
    if k < 0 or k > n:
        return _domain_zero(qv)
    num = q_factorial(n, qv)
    den = q_factorial(n - k, qv) * q_factorial(k, qv)
    if isinstance(qv, Poly):
        return num.exact_div(den)
    if is_zero_scalar(den):
        raise DomainError("q-factorial quotient undefined at this q")
    return num / den


def gauss_binom_compositions(n: int, k: int) -> Poly:
    """Brute-force oracle: sum q^(d1 + 2 d2 + ... + k dk) over all
    compositions d0 + ... + dk = n - k into k + 1 nonnegative parts."""
    if k < 0 or k > n:
        return Poly()
    counts: dict[int, int] = {}

    def place(i: int, remaining: int, wsum: int):
        if i == k:
            w = wsum + k * remaining
            counts[w] = counts.get(w, 0) + 1
            return
        for v in range(remaining + 1):
            place(i + 1, remaining - v, wsum + i * v)

    place(0, n - k, 0)
    top = max(counts)
    return Poly([counts.get(i, 0) for i in range(top + 1)])


def pochhammer_q(b, n: int, qv=None, ratio_exponent: int = 1):
    """(b; q^e)_n = prod_{i=1}^{n} (1 - b q^(e(i-1))) with e = ratio_exponent."""
    if n < 0:
        raise DomainError("pochhammer needs n >= 0")
    if qv is None:
        qv = q
    if ratio_exponent < 0 and isinstance(qv, Poly):
        qv = QRat(qv)
    ratio = q_power(qv, ratio_exponent)
    acc = None
    cur = qv ** 0
    for _ in range(n):
        factor = (-b) * cur + 1
        acc = factor if acc is None else acc * factor
        cur = cur * ratio
    if acc is None:
        acc = qv ** 0
    return acc


def inv_pochhammer_coeff(n: int, k: int, qv=None):
    """Coefficient of b^k in 1/(b;q)_n, which is the Gaussian binomial
    C(n+k-1, k)_q; these are the series weights of the boundary expansions."""
    if n < 1:
        raise DomainError("reciprocal pochhammer needs n >= 1")
    if k < 0:
        return _domain_zero(qv if qv is not None else q)
    return gauss_binom(n + k - 1, k, qv)


def pochhammer_b_coeffs(n: int, qv=None) -> list:
    """Expand prod_{i=1}^{n}(1 - b q^(i-1)) as a polynomial in b; returns
    the coefficient list [c0, ..., cn] over the q-domain."""
    if qv is None:
        qv = q
    one = qv ** 0
    coeffs = [one]
    qpow = one
    for _ in range(n):
        new = []
        for j in range(len(coeffs) + 1):
            val = coeffs[j] if j < len(coeffs) else None
            if j > 0:
                sub = qpow * coeffs[j - 1]
                val = -sub if val is None else val - sub
            new.append(val)
        coeffs = new
        qpow = qpow * qv
    return coeffs
