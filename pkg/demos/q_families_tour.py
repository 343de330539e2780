#!/usr/bin/env python3
"""The q-deformed families: Gaussian binomials, q-Euler and q-Genocchi
numbers, exact symbolic computation in Q(q), and exact q -> 1 limits.

Run:  python3 demos/q_families_tour.py
"""

from fractions import Fraction

from qgen.classical import genocchi, higher_euler_poly
from qgen.qcore import gauss_binom, q_factorial, q_int, rat_str
from qgen.qeuler import QEulerSpec, qeuler_hk, qeuler_twisted
from qgen.qgenocchi import QGenocchiSpec, qgenocchi, qgenocchi_hk

F = Fraction

print("q-integers interpolate the ordinary ones:")
print("  [5]_q =", q_int(5), "   [5]_{1/2} =", rat_str(q_int(5, F(1, 2))),
      "   [5]_{q->1} =", q_int(5)(F(1)))

print("\nGaussian binomials are polynomials in q with the classical value at q=1:")
g = gauss_binom(4, 2)
print("  C(4,2)_q =", g, "  -> at q=1:", g(F(1)))
print("  [3]_q! =", q_factorial(3))

print("\nThe base q-Genocchi numbers; the first is 1 for every q:")
for n in range(1, 5):
    print(f"  index {n}: symbolic {qgenocchi(n)}   at q=1/2: {rat_str(qgenocchi(n, F(1, 2)))}")

print("\nExact q -> 1 limits recover the classical sequence:")
for n in range(1, 8):
    print(f"  index {n}: limit {rat_str(qgenocchi(n).at_one())}"
          f"   classical {rat_str(genocchi(n))}")

print("\nThe order-k q-Euler values with weight h; at q=1 the weight drops out")
print("and the classical order-k polynomial value appears:")
for h in (0, 1, 2):
    sym = qeuler_hk(QEulerSpec(m=2, h=h, k=2, x=1))
    print(f"  m=2 k=2 x=1 h={h}: limit {rat_str(sym.at_one())}"
          f"   classical {rat_str(higher_euler_poly(2, 2)(F(1)))}")

print("\nTwists: w = 1 collapses to the untwisted family; other w deform it:")
for w in (F(1), F(1, 2)):
    print(f"  twisted index 1, w={rat_str(w)}, q=1/2:",
          rat_str(qeuler_twisted(1, w, F(1, 2))))

print("\nHigher-order q-Genocchi values vanish below the order (a structural")
print("consequence of the t^k factor), then start at k! times a single term:")
spec = QGenocchiSpec(n=0, h=1, k=2)
print("  indices 0..1 vanish; index 2 (n=0, k=2) symbolic:", qgenocchi_hk(spec))
