#!/usr/bin/env python3
"""A tour of the classical families, all extracted from exact truncated
exponential generating functions.

Run:  python3 demos/classical_tour.py
"""

from fractions import Fraction

from qgen.classical import (
    bernoulli,
    euler_number,
    euler_poly,
    frobenius_euler,
    genocchi,
    higher_euler_number,
    higher_genocchi,
    twisted_euler_classical,
)
from qgen.qcore import falling, rat_str

F = Fraction

print("Euler numbers E_n (coefficients of 2/(e^t+1)):")
print("  ", [rat_str(euler_number(n)) for n in range(11)])

print("\nGenocchi numbers G_n (coefficients of 2t/(e^t+1)):")
print("  ", [rat_str(genocchi(n)) for n in range(11)])

print("\nBernoulli numbers B_n:")
print("  ", [rat_str(bernoulli(n)) for n in range(11)])

print("\nThe three sequences interlock exactly:")
for n in (2, 6, 10, 14):
    lhs = genocchi(n)
    via_b = 2 * (1 - F(2) ** n) * bernoulli(n)
    via_e = n * euler_number(n - 1)
    print(f"  G_{n} = {rat_str(lhs)} = 2(1-2^{n})B_{n} = {rat_str(via_b)}"
          f" = {n}*E_{n-1} = {rat_str(via_e)}")

print("\nEuler polynomials satisfy E_n(x+1) + E_n(x) = 2x^n:")
for n in (1, 3, 5):
    e = euler_poly(n)
    print(f"  E_{n}(x) = {e};  E_{n}(x+1)+E_{n}(x) = {e.shifted(1) + e}")

print("\nHigher order: the index-shifted Genocchi numbers of order r are")
print("falling-factorial multiples of the order-r Euler numbers:")
for r in (2, 3):
    for n in (0, 1, 2):
        g = higher_genocchi(n + r, r)
        e = higher_euler_number(n, r)
        print(f"  r={r} n={n}:  G_{n + r}^({r}) = {rat_str(g)}"
              f" = ({n + r})_{r} * {rat_str(e)} = {falling(n + r, r)} * {rat_str(e)}")

print("\nTwisting by w weights the alternating sum by w^x; the values are")
print("scaled Frobenius-Euler numbers, 2/(w+1) * H_n(-1/w):")
for w in (F(1, 2), F(2)):
    vals = [rat_str(twisted_euler_classical(n, w)) for n in range(5)]
    print(f"  w = {rat_str(w)}: {vals}")
print("  check: H_1(u) = 1/(u-1) ->", rat_str(frobenius_euler(1, F(-2))),
      "at u = -2, and E_1(1/2) =", rat_str(twisted_euler_classical(1, F(1, 2))))
