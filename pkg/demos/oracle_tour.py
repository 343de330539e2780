#!/usr/bin/env python3
"""The verification machinery: brute-force fermionic level sums certify the
closed forms p-adically, real series certify them with exact tail bounds,
and boundary alternating series are smoothed to their Abel value.

Run:  python3 demos/oracle_tour.py
"""

from fractions import Fraction

from qgen.padic import (
    PadicParams,
    QBracketMonomial,
    SeriesParams,
    fermionic_sum,
    padic_limit_check,
    real_series,
)
from qgen.qcore import rat_str
from qgen.qeuler import QEulerSpec, qeuler_hk, qeuler_hk_series

F = Fraction

print("Level sums: the normalized alternating sum over x < p^N.")
print("For the constant integrand it is exactly 1 at every level:")
for N in (1, 2, 3):
    s = fermionic_sum(QBracketMonomial(m=0, k=1, h=1), F(4), PadicParams(3, N))
    print(f"  N={N}: {rat_str(s)}")

print("\np-adic certification: at q = 4 (so q = 1 mod 3) the level sums")
print("converge 3-adically to the closed form; the exact residuals gain")
print("one factor of 3 per level:")
spec = QEulerSpec(m=2, h=1, k=1)
closed = qeuler_hk(spec, F(4))
print("  closed form at q=4:", rat_str(closed))
rep = padic_limit_check(QBracketMonomial(m=2, k=1, h=1), closed, F(4), 3, [1, 2, 3, 4])
print("  residual 3-adic valuations over N=1..4:", rep.valuations,
      "verdict:", rep.verdict)

print("\nReal regime at q = 1/2: absolutely convergent families truncate")
print("with an exact geometric tail majorant:")
spec = QEulerSpec(m=1, h=1, k=1)
closed = qeuler_hk(spec, F(1, 2))
v, bound = real_series(QBracketMonomial(m=1, k=1, h=1), F(1, 2), SeriesParams(40, "direct"))
print("  closed:", rat_str(closed))
print("  |series - closed| =", float(abs(v - closed)), " <= bound =", float(bound))

print("\nBoundary series (weight h = k-1) alternate without decaying; one")
print("averaging pass over adjacent partial sums removes the oscillation and")
print("lands on the Abel value, matching the closed form:")
spec = QEulerSpec(m=1, h=0, k=1)
closed = qeuler_hk(spec, F(1, 2))
v, gap = qeuler_hk_series(spec, F(1, 2), SeriesParams(400, "cesaro1"))
print("  closed:", rat_str(closed), "  smoothed series diff:", float(abs(v - closed)))
