#!/usr/bin/env python3
"""Ihara zeta reciprocals and what their value at u = 1 knows.

The reciprocal zeta function of a multigraph is
(1 - u^2)^(-chi) * h(u) with h(u) = det(I - Au + (D - I)u^2), an integer
polynomial computed here by exact evaluation and interpolation.  h always
vanishes at u = 1, and its first derivative there carries the spanning
tree count: h'(1) = -2 chi kappa.
"""

from graph_iwasawa import (
    bouquet,
    cycle_graph,
    euler_characteristic,
    ihara_Z,
    ihara_h,
    spanning_tree_count,
    special_values,
)
from graph_iwasawa.polys import format_poly

print("== h for the bouquet B_2 ==")
b2 = bouquet(2)
h = ihara_h(b2)
print("h(u) =", format_poly(h))
exponent, _ = ihara_Z(b2)
print(f"Z(u) = (1 - u^2)^{exponent} * h(u)")

sv = special_values(h, b2)
print("h(1) =", sv.h_at_1, " h'(1) =", sv.dh_at_1)
print("chi =", euler_characteristic(b2),
      " so kappa =", sv.kappa_implied,
      " (matrix-tree agrees:", spanning_tree_count(b2), ")")

print()
print("== the cycle C_4: chi = 0, so the second derivative speaks ==")
c4 = cycle_graph(4)
sv = special_values(ihara_h(c4), c4)
print("h'(1) =", sv.dh_at_1, " h''(1) =", sv.d2h_at_1, "= 2 * 4^2")

print()
print("== a bigger sweep: h'(1) = -2 chi kappa on bouquets ==")
for t in (2, 3, 4, 5):
    g = bouquet(t)
    sv = special_values(ihara_h(g), g)
    chi = euler_characteristic(g)
    print(f"  B_{t}: chi={chi:>3}  h'(1)={sv.dh_at_1:>4}  "
          f"kappa={sv.kappa_implied}")
