#!/usr/bin/env python3
"""Cyclic covers from voltage assignments and the L-function factorization.

Labelling each directed edge of a base graph with a residue mod m (minus
the label on the reversed edge) determines a degree-m cyclic cover.  The
zeta polynomial of the cover factors over the divisors d of m into orbit
L-polynomials, one per Galois orbit of characters, and evaluating the
nontrivial factors at u = 1 decomposes m * kappa_cover into integers.
Everything is exact: characters never become floating-point numbers.
"""

from graph_iwasawa import (
    adjacency_matrix,
    artin_A_sigma,
    cayley_serre,
    derived_cover,
    ihara_h,
    orbit_h_poly,
    spanning_tree_count,
    verify_integer_decomposition,
    verify_product_formula,
)
from graph_iwasawa.polys import format_poly

print("== double cover of B_2 with voltages (1, 1) mod 2 ==")
vg = cayley_serre(2, (1, 1))
cover = derived_cover(vg)
print("cover adjacency:", adjacency_matrix(cover))
print("kappa(cover) =", spanning_tree_count(cover))
print("A(0) =", artin_A_sigma(vg, 0), " A(1) =", artin_A_sigma(vg, 1))

print()
print("base h:     ", format_poly(orbit_h_poly(vg, 1)))
print("twisted h:  ", format_poly(orbit_h_poly(vg, 2)))
print("cover h:    ", format_poly(ihara_h(cover)))
rpt = verify_product_formula(vg)
print("product formula holds:", rpt.ok)

print()
print("== integer decomposition: m * kappa_cover = kappa_base * product ==")
dec = verify_integer_decomposition(vg)
print(f"2 * {dec.kappa_cover} = {dec.kappa_base} * "
      f"{' * '.join(str(v) for v in dec.orbit_values.values())}  "
      f"-> {dec.ok}")

print()
print("== a degree-9 cover of B_3 with jumps (1, 4, 20) ==")
vg9 = cayley_serre(9, (1, 4, 20))
print("product formula:", verify_product_formula(vg9).ok)
dec = verify_integer_decomposition(vg9)
print(f"9 * {dec.kappa_cover} = {dec.kappa_base} * "
      f"{dec.orbit_values[3]} * {dec.orbit_values[9]}  -> {dec.ok}")

print()
print("== inflation: the order-d factor only depends on d ==")
a = orbit_h_poly(cayley_serre(4, (1, 1)), 2)
b = orbit_h_poly(cayley_serre(2, (1, 1)), 2)
print("same factor from the 4-cover and the 2-cover:", a == b)
