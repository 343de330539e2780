"""Acceptance suite: one test per criterion, each printing a pass/fail
line, with every tolerance pinned from the contract (zero tolerance for
exact identities, 1/1000 for the smoothed boundary series at M = 400,
exact tail majorants for truncated absolutely convergent series, and
valuation floors for the p-adic oracle)."""

import json
import math
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from qgen import classical, qcore
from qgen.padic import (
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
from qgen.qcore import Poly, QRat, falling, gauss_binom_triangle, q
from qgen.qeuler import QEulerSpec, qeuler_hk, qeuler_hk_series, qeuler_twisted
from qgen.qgenocchi import (
    QGenocchiSpec,
    qgenocchi,
    qgenocchi_hk,
    qgenocchi_hk_series,
    qgenocchi_twisted,
)

F = Fraction
Q4 = F(4)
QH = F(1, 2)
CESARO_TOL = F(1, 1000)


def report(num: int, label: str, ok: bool, extra: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" [{extra}]" if extra else ""
    print(f"criterion {num:02d} {status}: {label}{suffix}")
    assert ok, f"criterion {num} failed: {label}"


def _oracle_ok(f, target, levels, floor):
    rep = padic_limit_check(f, target, Q4, 3, levels)
    raw = rep.verdict and rep.valuations[-1] >= floor
    fallback = (not raw) and convergence_envelope_ok(rep) and rep.valuations[-1] >= floor
    return raw, fallback, rep.valuations


def test_criterion_01_q_combinatorics_exactness():
    t0 = time.time()
    tri = gauss_binom_triangle(20)
    tri_alt = gauss_binom_triangle(20, alt=True)
    ok = all(tri[n][k] == tri_alt[n][k] for n in range(21) for k in range(n + 1))
    for n in range(13):
        for k in range(n + 1):
            ok = ok and tri[n][k] == qcore.gauss_binom_factorial(n, k)
            ok = ok and tri[n][k] == qcore.gauss_binom_compositions(n, k)
    report(1, "Gaussian binomial routes identical (quotient/recursions/compositions)",
           ok, f"{time.time() - t0:.2f}s")


def test_criterion_02_binomial_formulae_both_directions():
    t0 = time.time()
    ok = True
    for n in range(11):
        coeffs = qcore.pochhammer_b_coeffs(n)
        for k in range(n + 1):
            expect = qcore.gauss_binom(n, k) * q ** math.comb(k, 2) * (-1) ** k
            ok = ok and coeffs[k] == expect
    depth = 12
    for n in range(1, 6):
        prod = qcore.pochhammer_b_coeffs(n)
        inv = [qcore.inv_pochhammer_coeff(n, k) for k in range(depth + 1)]
        for d in range(depth + 1):
            acc = q * 0
            for i in range(min(d, n) + 1):
                acc = acc + prod[i] * inv[d - i]
            ok = ok and acc == (q ** 0 if d == 0 else q * 0)
    report(2, "product = signed Gaussian sum; reciprocal series inverts to O(b^13)",
           ok, f"{time.time() - t0:.2f}s")


def test_criterion_03_classical_identities():
    t0 = time.time()
    ok = all(classical.genocchi(n) == 2 * (1 - F(2) ** n) * classical.bernoulli(n)
             for n in range(0, 21, 2))
    ok = ok and all(classical.genocchi(n) == n * classical.euler_number(n - 1)
                    for n in range(1, 21))
    xv = classical.x
    for n in range(16):
        e = classical.euler_poly(n)
        ok = ok and e.shifted(1) + e == 2 * xv ** n
    ok = ok and all(classical.genocchi(n) == 0 for n in range(3, 20, 2))
    report(3, "Genocchi/Bernoulli/Euler identities and complementarity", ok,
           f"{time.time() - t0:.2f}s")


def test_criterion_04_higher_order_coefficient_identity():
    t0 = time.time()
    ok = classical.higher_genocchi(4, 2) == 6
    for r in range(1, 5):
        for n in range(11):
            lhs = classical.higher_genocchi(n + r, r)
            rhs = falling(n + r, r) * classical.higher_euler_number(n, r)
            ok = ok and lhs == rhs
    report(4, "order-r Genocchi = falling-factorial times order-r Euler", ok,
           f"{time.time() - t0:.2f}s")


def test_criterion_05_padic_oracle_qeuler():
    t0 = time.time()
    ok = True
    fallbacks = 0
    worst = None
    for k in (1, 2):
        for m in range(5):
            for h in (k - 1, k, k + 1):
                for x in (0, 1, 2):
                    for w in (F(1), Q4):
                        cf = qeuler_hk(QEulerSpec(m=m, h=h, k=k, x=x, w=w), Q4)
                        f = QBracketMonomial(m=m, k=k, h=h, w=w, x=x)
                        raw, fb, vals = _oracle_ok(f, cf, [1, 2, 3], 2)
                        if fb:
                            fallbacks += 1
                        if not (raw or fb):
                            ok = False
                            worst = (m, k, h, x, w, vals)
    for m in range(3):
        for h in (2, 3, 4):
            for x in (0, 1, 2):
                for w in (F(1), Q4):
                    cf = qeuler_hk(QEulerSpec(m=m, h=h, k=3, x=x, w=w), Q4)
                    f = QBracketMonomial(m=m, k=3, h=h, w=w, x=x)
                    raw, fb, vals = _oracle_ok(f, cf, [1, 2], 1)
                    if fb:
                        fallbacks += 1
                    if not (raw or fb):
                        ok = False
                        worst = (m, 3, h, x, w, vals)
    extra = f"{time.time() - t0:.2f}s, {fallbacks} early-proximity envelope fallbacks"
    if worst:
        extra += f", worst {worst}"
    report(5, "q-Euler closed forms certified by fermionic level sums at q=4", ok, extra)


def test_criterion_06_padic_oracle_qgenocchi():
    t0 = time.time()
    ok = True
    fallbacks = 0
    worst = None
    for k in (1, 2):
        for n in range(4):
            for h in (k - 1, k, k + 1):
                for w in (F(1), Q4):
                    g = qgenocchi_hk(QGenocchiSpec(n=n, h=h, k=k, w=w), Q4)
                    target = g / (math.factorial(k) * math.comb(n + k, k))
                    f = QBracketMonomial(m=n, k=k, h=h, w=w, x=0)
                    raw, fb, vals = _oracle_ok(f, target, [1, 2, 3], 2)
                    if fb:
                        fallbacks += 1
                    if not (raw or fb):
                        ok = False
                        worst = (n, k, h, w, vals)
    for n in range(3):
        for h in (2, 3, 4):
            for w in (F(1), Q4):
                g = qgenocchi_hk(QGenocchiSpec(n=n, h=h, k=3, w=w), Q4)
                target = g / (math.factorial(3) * math.comb(n + 3, 3))
                f = QBracketMonomial(m=n, k=3, h=h, w=w, x=0)
                raw, fb, vals = _oracle_ok(f, target, [1, 2], 1)
                if fb:
                    fallbacks += 1
                if not (raw or fb):
                    ok = False
                    worst = (n, 3, h, w, vals)
    extra = f"{time.time() - t0:.2f}s, {fallbacks} early-proximity envelope fallbacks"
    if worst:
        extra += f", worst {worst}"
    report(6, "q-Genocchi closed forms certified by scaled fermionic level sums", ok, extra)


def test_criterion_07_real_series_absolute_regime():
    t0 = time.time()
    ok = True
    for k in (1, 2):
        for m in range(4):
            for h in (k, k + 1):
                for w in (F(1), F(1, 2)):
                    for x in (0, 1):
                        cf = qeuler_hk(QEulerSpec(m=m, h=h, k=k, x=x, w=w), QH)
                        f = QBracketMonomial(m=m, k=k, h=h, w=w, x=x)
                        v, bound = real_series(f, QH, SeriesParams(40, "direct"))
                        ok = ok and abs(v - cf) <= bound and bound <= F(1, 2 ** 20)
    report(7, "truncated absolute series within exact tail bound <= 2^-20", ok,
           f"{time.time() - t0:.2f}s")


def test_criterion_08_boundary_series_within_tolerance():
    t0 = time.time()
    ok = True
    worst = F(0)
    for k in (1, 2):
        for m in range(4):
            for x in (0, 1, 2):
                for w in (F(1), F(1, 2)):
                    spec = QEulerSpec(m=m, h=k - 1, k=k, x=x, w=w)
                    v, _ = qeuler_hk_series(spec, QH, SeriesParams(400, "cesaro1"))
                    diff = abs(v - qeuler_hk(spec, QH))
                    worst = max(worst, diff)
                    ok = ok and diff <= CESARO_TOL
    for k in (1, 2):
        for n in range(4):
            for w in (F(1), F(1, 2)):
                gspec = QGenocchiSpec(n=n, h=k - 1, k=k, w=w)
                v, _ = qgenocchi_hk_series(gspec, QH, SeriesParams(400, "cesaro1"))
                diff = abs(v - qgenocchi_hk(gspec, QH))
                worst = max(worst, diff)
                ok = ok and diff <= CESARO_TOL
    report(8, "boundary series values within 1/1000 of closed forms at M=400", ok,
           f"{time.time() - t0:.2f}s, worst |diff| ~ {float(worst):.3g}")


def test_criterion_09_exact_classical_limits():
    t0 = time.time()
    ok = True
    for m in range(5):
        for k in (1, 2, 3):
            for h in (k - 1, k):
                for x in (0, 1, 2):
                    sym = qeuler_hk(QEulerSpec(m=m, h=h, k=k, x=x))
                    ok = ok and sym.at_one() == classical.higher_euler_poly(m, k)(F(x))
    for n in range(5):
        for k in (1, 2, 3):
            sym = qgenocchi_hk(QGenocchiSpec(n=n, h=k - 1, k=k))
            ok = ok and sym.at_one() == classical.higher_genocchi(n + k, k)
    for n in range(8):
        ok = ok and qeuler_twisted(n, F(1), QH) == qeuler_hk(QEulerSpec(m=n, h=1, k=1), QH)
        ok = ok and qgenocchi_twisted(n, QH, F(1)) == qgenocchi(n, QH)
        ok = ok and qeuler_twisted(n, F(1)) == qeuler_hk(QEulerSpec(m=n, h=1, k=1))
        ok = ok and qgenocchi_twisted(n, w=F(1)) == qgenocchi(n)
    for m in range(3):
        for k in (1, 2):
            a = qeuler_hk(QEulerSpec(m=m, h=k, k=k, w=F(1)), QH)
            ok = ok and a == qeuler_hk(QEulerSpec(m=m, h=k, k=k), QH)
    report(9, "symbolic q->1 limits exact; w=1 collapses every twisted family", ok,
           f"{time.time() - t0:.2f}s")


def test_criterion_10_twisted_euler_frobenius_identity():
    t0 = time.time()
    ok = classical.twisted_euler_classical(1, F(1, 2)) == F(-4, 9)
    for w in (F(1, 2), F(1, 3), F(2)):
        for n in range(11):
            lhs = classical.twisted_euler_classical(n, w)
            ok = ok and lhs == 2 / (w + 1) * classical.frobenius_euler(n, -1 / w)
    # independent series route at |w| < 1 within the exact tail bound
    for w in (F(1, 2), F(1, 3)):
        for n in range(6):
            v, bound = real_series(ClassicalMonomial(n=n, w=w), F(1),
                                   SeriesParams(80, "direct"))
            ok = ok and abs(v - classical.twisted_euler_classical(n, w)) <= bound
    report(10, "twisted Euler equals scaled Frobenius-Euler, exactly and by series",
           ok, f"{time.time() - t0:.2f}s")


def test_criterion_11_shift_identity_residuals():
    t0 = time.time()
    ok = True
    for n_shift in (1, 2, 3):
        for f in (ClassicalMonomial(n=1), QBracketMonomial(m=1, k=1, h=1)):
            vals = [val_p(shift_identity_residual(f, n_shift, Q4, PadicParams(3, N)), 3)
                    for N in range(1, 6)]
            grows = all(vals[i] < vals[i + 1] for i in range(len(vals) - 1))
            ok = ok and grows
    for n_shift in (1, 2, 3):
        res = shift_identity_residual(ClassicalMonomial(n=0), n_shift, F(1),
                                      PadicParams(3, 2))
        ok = ok and res == 0
    report(11, "translation-identity residuals vanish p-adically (exactly for constants)",
           ok, f"{time.time() - t0:.2f}s")


def _qgen(*args):
    return subprocess.run([sys.executable, "-m", "qgen", *args],
                          capture_output=True, text=True)


def test_criterion_12_cli_contract(tmp_path):
    t0 = time.time()
    a = _qgen("qeuler", "--m", "2", "--h", "1", "--k", "2", "--mode", "symbolic")
    b = _qgen("qeuler", "--m", "2", "--h", "1", "--k", "2", "--mode", "symbolic")
    ok = a.returncode == 0 and a.stdout == b.stdout

    doc = json.loads(a.stdout)
    parsed = QRat(Poly([qcore.parse_rat(s) for s in doc["value"]["num"]]),
                  Poly([qcore.parse_rat(s) for s in doc["value"]["den"]]))
    ok = ok and parsed == qeuler_hk(QEulerSpec(m=2, h=1, k=2))

    ok = ok and _qgen("qnum", "--n", "2").returncode == 2
    ok = ok and _qgen("frobnicate").returncode == 2
    bad = _qgen("qeuler", "--m", "0", "--h", "1", "--k", "1", "--q", "1/2", "--w", "-2")
    ok = ok and bad.returncode == 1 and "vanishing" in bad.stderr

    ver = _qgen("verify", "all", "--padic-level", "2")
    ok = ok and ver.returncode == 0 and "all suites passed" in ver.stdout
    report(12, "CLI determinism, round-trip, exit codes, and verify-all green", ok,
           f"{time.time() - t0:.2f}s")
