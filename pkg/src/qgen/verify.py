"""Verification suites: each module's invariant grid as a runnable check,
with a fixed report order, exact tolerances, and machine-readable results.
These back the `qgen verify` command."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import classical, padic, qcore
from .padic import (
    ClassicalMonomial,
    PadicParams,
    QBracketMonomial,
    SeriesParams,
    convergence_envelope_ok,
    padic_limit_check,
    real_series,
    shift_identity_residual,
    val_p,
)
from .qcore import gauss_binom, q
from .qeuler import QEulerSpec, qeuler_hk, qeuler_hk_series, qeuler_twisted
from .qgenocchi import QGenocchiSpec, qgenocchi, qgenocchi_hk, qgenocchi_hk_series, qgenocchi_twisted


@dataclass
class VerifyConfig:
    padic_level: int = 2
    M: int = 400
    cesaro_tol: Fraction = Fraction(1, 1000)
    term_budget: int = padic.DEFAULT_TERM_BUDGET


@dataclass
class CheckResult:
    name: str
    ok: bool
    points: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.name}: {self.points} points{extra}"


def _run_grid(name: str, points) -> CheckResult:
    """points yields (label, ok, info); collects the first failure."""
    count = 0
    for label, ok, info in points:
        count += 1
        if not ok:
            return CheckResult(name, False, count, f"failed at {label}: {info}")
    return CheckResult(name, True, count)


def _oracle_point(f, target, qv, levels, budget):
    rep = padic_limit_check(f, target, qv, 3, levels, budget)
    ok = rep.verdict or convergence_envelope_ok(rep)
    return ok, rep.valuations


# ---------------------------------------------------------------- qcore

def suite_qcore(cfg: VerifyConfig) -> list[CheckResult]:
    out = []

    tri = qcore.gauss_binom_triangle(20)
    tri_alt = qcore.gauss_binom_triangle(20, alt=True)

    def recursions():
        for n in range(21):
            for k in range(n + 1):
                yield (n, k), tri[n][k] == tri_alt[n][k], "recursion forms differ"

    out.append(_run_grid("gauss-binom-recursion-forms", recursions()))

    def quotient():
        for n in range(13):
            for k in range(n + 1):
                b = qcore.gauss_binom_factorial(n, k)
                yield (n, k), tri[n][k] == b, "factorial quotient differs"

    out.append(_run_grid("gauss-binom-factorial-quotient", quotient()))

    def compositions():
        for n in range(13):
            for k in range(n + 1):
                b = qcore.gauss_binom_compositions(n, k)
                yield (n, k), tri[n][k] == b, "composition enumeration differs"

    out.append(_run_grid("gauss-binom-compositions", compositions()))

    def symmetry():
        for n in range(21):
            for k in range(n + 1):
                yield (n, k), tri[n][k] == tri[n][n - k], "asymmetric"

    out.append(_run_grid("gauss-binom-symmetry", symmetry()))

    def signed_expansion():
        for n in range(11):
            coeffs = qcore.pochhammer_b_coeffs(n)
            for k in range(n + 1):
                expect = (tri[n][k] * q ** math.comb(k, 2)) * ((-1) ** k)
                yield (n, k), coeffs[k] == expect, "signed Gaussian sum differs"

    out.append(_run_grid("pochhammer-signed-expansion", signed_expansion()))

    def reciprocal_truncation():
        depth = 12
        for n in range(1, 6):
            prod = qcore.pochhammer_b_coeffs(n)
            inv = [qcore.inv_pochhammer_coeff(n, k) for k in range(depth + 1)]
            for d in range(depth + 1):
                acc = q * 0
                for i in range(min(d, n) + 1):
                    acc = acc + prod[i] * inv[d - i]
                expect = q ** 0 if d == 0 else q * 0
                yield (n, d), acc == expect, "truncated reciprocal fails"

    out.append(_run_grid("pochhammer-reciprocal-truncation", reciprocal_truncation()))

    def ratio_inversion():
        for j in range(9):
            for k in range(9):
                a = qcore.pochhammer_q(-(qcore.q_sym ** j), k)
                b = qcore.pochhammer_q(-(qcore.q_sym ** (j + k - 1)), k, ratio_exponent=-1) \
                    if j + k - 1 >= 0 else a
                yield (j, k), a == b, "ratio-inverted product differs"

    out.append(_run_grid("pochhammer-ratio-inversion", ratio_inversion()))

    def homomorphism():
        samples = [Fraction(1, 2), Fraction(2, 3), Fraction(4), Fraction(-2)]
        for q0 in samples:
            for n in range(9):
                sym = qcore.q_int(n)
                yield ("q_int", n, q0), sym(q0) == qcore.q_int(n, q0), "q_int mismatch"
                if q0 != -1:
                    symb = qcore.q_bracket_neg(n)
                    yield ("q_bracket_neg", n, q0), symb(q0) == qcore.q_bracket_neg(n, q0), "bracket mismatch"
                for k in range(n + 1):
                    sg = tri[n][k]
                    yield ("gauss", n, k, q0), sg(q0) == gauss_binom(n, k, q0), "gauss mismatch"

    out.append(_run_grid("evaluation-homomorphism", homomorphism()))
    return out


# ------------------------------------------------------------- classical

def suite_classical(cfg: VerifyConfig) -> list[CheckResult]:
    out = []
    xp = classical.x

    def complementarity():
        for n in range(16):
            e = classical.euler_poly(n)
            lhs = e.shifted(1) + e
            yield n, lhs == 2 * xp ** n, "E_n(x+1)+E_n(x) != 2x^n"

    out.append(_run_grid("euler-complementarity", complementarity()))

    def order_coefficients():
        for r in range(1, 5):
            for n in range(11):
                lhs = classical.higher_genocchi(n + r, r)
                rhs = qcore.falling(n + r, r) * classical.higher_euler_number(n, r)
                yield (n, r), lhs == rhs, f"{lhs} != {rhs}"

    out.append(_run_grid("higher-genocchi-euler-coefficients", order_coefficients()))

    def genocchi_identities():
        for n in range(0, 21, 2):
            lhs = classical.genocchi(n)
            rhs = 2 * (1 - Fraction(2) ** n) * classical.bernoulli(n)
            yield ("bernoulli", n), lhs == rhs, f"{lhs} != {rhs}"
        for n in range(1, 21):
            lhs = classical.genocchi(n)
            rhs = n * classical.euler_number(n - 1)
            yield ("euler", n), lhs == rhs, f"{lhs} != {rhs}"
        for n in range(3, 20, 2):
            yield ("odd", n), classical.genocchi(n) == 0, "odd index not zero"

    out.append(_run_grid("genocchi-identities", genocchi_identities()))

    def order_one():
        for n in range(13):
            yield ("euler", n), classical.higher_euler_poly(n, 1) == classical.euler_poly(n), "order-1 euler"
            yield ("genocchi", n), classical.higher_genocchi(n, 1) == classical.genocchi(n), "order-1 genocchi"

    out.append(_run_grid("order-one-reduction", order_one()))

    def frobenius_at_zero():
        for u in (Fraction(2), Fraction(-2), Fraction(1, 3)):
            for n in range(11):
                p = classical.frobenius_euler_poly(n, u)
                yield (n, u), p(Fraction(0)) == classical.frobenius_euler(n, u), "H_n(u,0) != H_n(u)"

    out.append(_run_grid("frobenius-poly-at-zero", frobenius_at_zero()))
    return out


# ----------------------------------------------------------------- padic

def suite_padic(cfg: VerifyConfig) -> list[CheckResult]:
    out = []

    def normalization():
        # the constant integrand needs a trivial weight: k = 1 with h = 1,
        # or the degree-0 classical monomial
        for qv in (Fraction(1, 2), Fraction(4), Fraction(1)):
            for N in (1, 2, 3):
                for f in (QBracketMonomial(m=0, k=1, h=1), ClassicalMonomial(n=0)):
                    s = padic.fermionic_sum(f, qv, PadicParams(3, N), cfg.term_budget)
                    yield (qv, type(f).__name__, N), s == 1, f"normalized sum is {s}"

    out.append(_run_grid("constant-integrand-normalization", normalization()))

    def additivity():
        qv = Fraction(4)
        for N in range(2, 5):
            coarse = PadicParams(3, N - 1)
            fine = PadicParams(3, N)
            for a in range(3 ** (N - 1)):
                lhs = padic.measure_value(a, coarse, qv)
                rhs = sum(padic.measure_value(a + i * 3 ** (N - 1), fine, qv) for i in range(3))
                yield (N, a), lhs == rhs, "refinement sum differs"

    out.append(_run_grid("measure-additivity", additivity()))

    def oracle():
        levels = list(range(1, cfg.padic_level + 1))
        for k in (1, 2):
            for m in range(3):
                for h in (k - 1, k):
                    for w in (Fraction(1), Fraction(4)):
                        cf = qeuler_hk(QEulerSpec(m=m, h=h, k=k, w=w), Fraction(4))
                        f = QBracketMonomial(m=m, k=k, h=h, w=w)
                        ok, vals = _oracle_point(f, cf, Fraction(4), levels, cfg.term_budget)
                        yield (m, k, h, w), ok, f"valuations {vals}"

    out.append(_run_grid("closed-form-valuation-growth", oracle()))

    def absolute_series():
        for k in (1, 2):
            for m in range(3):
                cf = qeuler_hk(QEulerSpec(m=m, h=k, k=k), Fraction(1, 2))
                f = QBracketMonomial(m=m, k=k, h=k)
                prev_bound = None
                for M in (10, 20, 40):
                    v, b = real_series(f, Fraction(1, 2), SeriesParams(M, "direct"), cfg.term_budget)
                    ok = abs(v - cf) <= b and (prev_bound is None or b < prev_bound)
                    prev_bound = b
                    yield (m, k, M), ok, f"|diff|={abs(v - cf)} bound={b}"

    out.append(_run_grid("absolute-series-tail-bounds", absolute_series()))

    def cesaro_boundary():
        for m in range(3):
            cf = qeuler_hk(QEulerSpec(m=m, h=0, k=1), Fraction(1, 2))
            f = QBracketMonomial(m=m, k=1, h=0)
            v, _ = real_series(f, Fraction(1, 2), SeriesParams(cfg.M, "cesaro1"), cfg.term_budget)
            yield ("k1", m), abs(v - cf) <= cfg.cesaro_tol, f"|diff|={abs(v - cf)}"
        cf = qeuler_hk(QEulerSpec(m=1, h=1, k=2), Fraction(1, 2))
        f = QBracketMonomial(m=1, k=2, h=1)
        v, _ = real_series(f, Fraction(1, 2), SeriesParams(60, "cesaro1"), cfg.term_budget)
        yield ("k2", 1), abs(v - cf) <= cfg.cesaro_tol, f"|diff|={abs(v - cf)}"

    out.append(_run_grid("boundary-series-regularization", cesaro_boundary()))

    def shifts():
        res = shift_identity_residual(ClassicalMonomial(n=0), 1, Fraction(1), PadicParams(3, 2))
        yield ("constant", 1), res == 0, f"residual {res}"
        for n_shift in (1, 2):
            for f in (ClassicalMonomial(n=1), QBracketMonomial(m=1, k=1, h=1)):
                vals = []
                for N in range(1, 5):
                    r = shift_identity_residual(f, n_shift, Fraction(4), PadicParams(3, N))
                    vals.append(val_p(r, 3))
                ok = all(vals[i] <= vals[i + 1] for i in range(len(vals) - 1))
                yield (type(f).__name__, n_shift), ok, f"valuations {vals}"

    out.append(_run_grid("shift-identity-residuals", shifts()))
    return out


# ---------------------------------------------------------------- qeuler

def suite_qeuler(cfg: VerifyConfig) -> list[CheckResult]:
    out = []
    q4 = Fraction(4)
    qh = Fraction(1, 2)

    def oracle():
        levels = list(range(1, cfg.padic_level + 1))
        for k in (1, 2):
            for m in range(5):
                for h in (k - 1, k, k + 1):
                    for xx in (0, 1, 2):
                        for w in (Fraction(1), Fraction(4)):
                            cf = qeuler_hk(QEulerSpec(m=m, h=h, k=k, x=xx, w=w), q4)
                            f = QBracketMonomial(m=m, k=k, h=h, w=w, x=xx)
                            ok, vals = _oracle_point(f, cf, q4, levels, cfg.term_budget)
                            yield (m, k, h, xx, w), ok, f"valuations {vals}"
        k3_levels = levels[: max(1, min(2, len(levels)))]
        for m in range(3):
            for h in (2, 3, 4):
                for w in (Fraction(1), Fraction(4)):
                    cf = qeuler_hk(QEulerSpec(m=m, h=h, k=3, w=w), q4)
                    f = QBracketMonomial(m=m, k=3, h=h, w=w)
                    ok, vals = _oracle_point(f, cf, q4, k3_levels, cfg.term_budget)
                    yield (m, 3, h, 0, w), ok, f"valuations {vals}"

    out.append(_run_grid("integral-oracle-valuations", oracle()))

    def absolute():
        for k in (1, 2):
            for m in range(4):
                for h in (k, k + 1):
                    for w in (Fraction(1), Fraction(1, 2)):
                        cf = qeuler_hk(QEulerSpec(m=m, h=h, k=k, w=w), qh)
                        f = QBracketMonomial(m=m, k=k, h=h, w=w)
                        v, b = real_series(f, qh, SeriesParams(40, "direct"), cfg.term_budget)
                        yield (m, k, h, w), abs(v - cf) <= b, f"|diff|={abs(v - cf)} bound={b}"

    out.append(_run_grid("real-series-absolute-oracle", absolute()))

    def series_agreement():
        for k in (1, 2):
            for m in range(4):
                for xx in (0, 1, 2):
                    for w in (Fraction(1), Fraction(1, 2)):
                        spec = QEulerSpec(m=m, h=k - 1, k=k, x=xx, w=w)
                        cf = qeuler_hk(spec, qh)
                        v, _ = qeuler_hk_series(spec, qh, SeriesParams(cfg.M, "cesaro1"))
                        yield (m, k, xx, w), abs(v - cf) <= cfg.cesaro_tol, f"|diff|={abs(v - cf)}"

    out.append(_run_grid("boundary-series-closed-agreement", series_agreement()))

    def classical_limit():
        for k in (1, 2, 3):
            for m in range(5):
                for h in (k - 1, k, k + 1):
                    for xx in (0, 1, 2):
                        sym = qeuler_hk(QEulerSpec(m=m, h=h, k=k, x=xx))
                        expect = classical.higher_euler_poly(m, k)(Fraction(xx))
                        yield (m, k, h, xx), sym.at_one() == expect, "q->1 limit differs"

    out.append(_run_grid("classical-limit", classical_limit()))

    def twist_reduction():
        for n in range(9):
            a = qeuler_twisted(n, Fraction(1), qh)
            b = qeuler_hk(QEulerSpec(m=n, h=1, k=1), qh)
            yield ("exact", n), a == b, f"{a} != {b}"
            sa = qeuler_twisted(n, Fraction(1))
            sb = qeuler_hk(QEulerSpec(m=n, h=1, k=1))
            yield ("symbolic", n), sa == sb, "symbolic twist mismatch"

    out.append(_run_grid("twist-reduction", twist_reduction()))

    def remark_identity():
        for w in (Fraction(1, 2), Fraction(1, 3), Fraction(2)):
            for n in range(11):
                lhs = classical.twisted_euler_classical(n, w)
                rhs = Fraction(2) / (w + 1) * classical.frobenius_euler(n, -1 / w)
                yield (n, w), lhs == rhs, f"{lhs} != {rhs}"

    out.append(_run_grid("twisted-euler-frobenius-identity", remark_identity()))
    return out


# ------------------------------------------------------------- qgenocchi

def suite_qgenocchi(cfg: VerifyConfig) -> list[CheckResult]:
    out = []
    q4 = Fraction(4)
    qh = Fraction(1, 2)

    def moments():
        for n in range(6):
            moment = qgenocchi(n + 1, qh) / (n + 1)
            f = QBracketMonomial(m=n, k=1, h=1)
            v, b = real_series(f, qh, SeriesParams(60, "direct"), cfg.term_budget)
            yield n, abs(v - moment) <= b, f"|diff|={abs(v - moment)} bound={b}"

    out.append(_run_grid("index-shift-moments", moments()))

    def oracle():
        levels = list(range(1, cfg.padic_level + 1))
        for k in (1, 2):
            for n in range(4):
                for h in (k - 1, k, k + 1):
                    for w in (Fraction(1), Fraction(4)):
                        g = qgenocchi_hk(QGenocchiSpec(n=n, h=h, k=k, w=w), q4)
                        target = g / (math.factorial(k) * math.comb(n + k, k))
                        f = QBracketMonomial(m=n, k=k, h=h, w=w)
                        ok, vals = _oracle_point(f, target, q4, levels, cfg.term_budget)
                        yield (n, k, h, w), ok, f"valuations {vals}"

    out.append(_run_grid("integral-oracle-valuations", oracle()))

    def classical_limit():
        for n in range(11):
            yield ("base", n), qgenocchi(n).at_one() == classical.genocchi(n), "q->1 differs"
        for k in (1, 2, 3):
            for n in range(5):
                sym = qgenocchi_hk(QGenocchiSpec(n=n, h=k - 1, k=k))
                expect = classical.higher_genocchi(n + k, k)
                yield ("order", n, k), sym.at_one() == expect, "higher-order q->1 differs"

    out.append(_run_grid("classical-limit", classical_limit()))

    def coefficient_consistency():
        for k in range(1, 5):
            for n in range(11):
                a = math.factorial(k) * math.comb(n + k, k)
                b = qcore.falling(n + k, k)
                yield (n, k), a == b, f"{a} != {b}"

    out.append(_run_grid("order-coefficient-forms", coefficient_consistency()))

    def twist_continuity():
        for n in range(9):
            yield ("exact", n), qgenocchi_twisted(n, qh, Fraction(1)) == qgenocchi(n, qh), "w=1 exact"
            yield ("symbolic", n), qgenocchi_twisted(n, w=Fraction(1)) == qgenocchi(n), "w=1 symbolic"
        for n in range(4):
            a = qgenocchi_hk(QGenocchiSpec(n=n, h=1, k=2, w=Fraction(1)), qh)
            b = qgenocchi_hk(QGenocchiSpec(n=n, h=1, k=2), qh)
            yield ("hk", n), a == b, "hk twist default mismatch"

    out.append(_run_grid("twist-continuity", twist_continuity()))

    def g1():
        for qv in (Fraction(1, 2), Fraction(1, 3), Fraction(4)):
            yield qv, qgenocchi(1, qv) == 1, "G_1 != 1"
        yield "symbolic", qgenocchi(1) == 1, "G_1 != 1 symbolically"

    out.append(_run_grid("first-value-is-one", g1()))

    def series_agreement():
        for k in (1, 2):
            for n in range(4):
                for w in (Fraction(1), Fraction(1, 2)):
                    spec = QGenocchiSpec(n=n, h=k - 1, k=k, w=w)
                    cf = qgenocchi_hk(spec, qh)
                    v, _ = qgenocchi_hk_series(spec, qh, SeriesParams(cfg.M, "cesaro1"))
                    yield (n, k, w), abs(v - cf) <= cfg.cesaro_tol, f"|diff|={abs(v - cf)}"

    out.append(_run_grid("boundary-series-closed-agreement", series_agreement()))
    return out


# ---------------------------------------------------------------- limits

def suite_limits(cfg: VerifyConfig) -> list[CheckResult]:
    out = []
    qh = Fraction(1, 2)

    def euler_limits():
        for k in (1, 2, 3):
            for m in range(5):
                for xx in (0, 1, 2):
                    sym = qeuler_hk(QEulerSpec(m=m, h=k - 1, k=k, x=xx))
                    expect = classical.higher_euler_poly(m, k)(Fraction(xx))
                    yield (m, k, xx), sym.at_one() == expect, "E-limit differs"

    out.append(_run_grid("qeuler-classical-limits", euler_limits()))

    def genocchi_limits():
        for k in (1, 2, 3):
            for n in range(5):
                sym = qgenocchi_hk(QGenocchiSpec(n=n, h=k - 1, k=k))
                expect = classical.higher_genocchi(n + k, k)
                yield (n, k), sym.at_one() == expect, "G-limit differs"

    out.append(_run_grid("qgenocchi-classical-limits", genocchi_limits()))

    def twist_collapse():
        one = Fraction(1)
        for n in range(8):
            yield ("teuler", n), qeuler_twisted(n, one, qh) == qeuler_hk(QEulerSpec(m=n, h=1, k=1), qh), "twisted euler"
            yield ("tgen", n), qgenocchi_twisted(n, qh, one) == qgenocchi(n, qh), "twisted genocchi"
        for m in range(3):
            for k in (1, 2):
                a = qeuler_hk(QEulerSpec(m=m, h=k, k=k, w=one), qh)
                b = qeuler_hk(QEulerSpec(m=m, h=k, k=k), qh)
                yield ("hk", m, k), a == b, "hk twist"
        for n in range(4):
            sym = qgenocchi_twisted(n, w=one)
            yield ("tgen-sym", n), sym == qgenocchi(n), "symbolic twisted genocchi"

    out.append(_run_grid("twist-unity-collapse", twist_collapse()))
    return out


SUITES = {
    "qcore": suite_qcore,
    "classical": suite_classical,
    "padic": suite_padic,
    "qeuler": suite_qeuler,
    "qgenocchi": suite_qgenocchi,
    "limits": suite_limits,
}

SUITE_ORDER = ["qcore", "classical", "padic", "qeuler", "qgenocchi", "limits"]


def run_suites(names, cfg: VerifyConfig | None = None) -> dict:
    """Run the named suites in fixed order; returns the structured report."""
    cfg = cfg or VerifyConfig()
    if "all" in names:
        names = SUITE_ORDER
    else:
        names = [n for n in SUITE_ORDER if n in names]
    report = {"suites": [], "ok": True}
    for name in names:
        results = SUITES[name](cfg)
        ok = all(r.ok for r in results)
        report["ok"] = report["ok"] and ok
        report["suites"].append({
            "suite": name,
            "ok": ok,
            "checks": [
                {"name": r.name, "ok": r.ok, "points": r.points, "detail": r.detail}
                for r in results
            ],
        })
    return report
