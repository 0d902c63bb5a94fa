#!/usr/bin/env python3
"""Exact arithmetic with prime-power roots of unity.

The elements eps(a) = (1 - zeta^a)(1 - zeta^(-a)) live in Z[zeta] for
zeta a primitive l^i-th root of unity.  Their norms are resultants with
the cyclotomic polynomial, and their valuation at the unique prime above
l follows a crisp pattern: 2 when a is coprime to l, 2 l^s when l^s
exactly divides a, infinite when zeta^a = 1.
"""

import math

from graph_iwasawa import (
    INFINITY,
    cyc_mul,
    epsilon,
    norm,
    ord_L,
    phi_poly,
    zeta_gen,
)
from graph_iwasawa.polys import format_poly

print("== cyclotomic moduli ==")
for ell, i in ((2, 1), (2, 3), (3, 2)):
    print(f"  Phi for l={ell}, i={i}:", format_poly(phi_poly(ell, i), "y"))

print()
print("== eps elements reduce to friendly constants in small rings ==")
print("eps(1) in Z[zeta_3]:", epsilon(3, 1, 1))
print("eps(2) in Z[zeta_4]:", epsilon(2, 2, 2))
print("norm of eps(1) at (3,1):", norm(epsilon(3, 1, 1)))

print()
print("== norms are multiplicative, zeta is a unit ==")
z = zeta_gen(5, 1)
e = epsilon(5, 1, 2)
print("norm(zeta) =", norm(z))
print("norm(zeta * eps(2)) =", norm(cyc_mul(z, e)), "= norm(eps(2)) =", norm(e))

print()
print("== the valuation ladder at l = 3, level i = 3 (m = 27) ==")
for a in range(0, 28):
    v = ord_L(epsilon(3, 3, a))
    shape = "infinite" if v == INFINITY else str(v)
    tag = ("zeta^a = 1" if a % 27 == 0
           else "coprime" if math.gcd(a, 3) == 1
           else f"3^{1 if a % 9 else 2} divides a")
    print(f"  a={a:>2}: ord = {shape:>8}  ({tag})")
