"""Walkthrough: Adams operations three ways.

Psi^k comes from the logarithmic derivative of the generating series of
the full classes; Psi_pi multiplies those; Psi_K solves the triangular
marks system.  The demo prints the small cases and checks the averaging
relation and the gcd collapse on a concrete Burnside ring.
"""

from fractions import Fraction

from betaring import PermGroup, eval_burnside, lin, orbit_decompose, psi_partition, psi_upper
from betaring.adams import solve_psi_K
from betaring.burnside import GSet

print("=== log-derivative elements ===")
for k in (1, 2, 3):
    print(f"Psi^{k} =", psi_upper(k))
    print(f"   lin: {lin(psi_upper(k))}")

print()
print("=== the marks system for S2 and S3 ===")
for n in (2, 3):
    table = solve_psi_K(n)
    for cls in table.catalog.classes:
        name = cls.aliases[0] if cls.aliases else cls.label
        print(f"  Psi_{name:<6} = {table.element(cls.index)}")
    print()

print("=== averaging: Psi_pi is a weighted sum of the Psi_H of that type ===")
table = solve_psi_K(3)
pi = (2, 1)
print("Psi_(2,1) =", psi_partition(pi))
for cls in table.catalog.classes:
    if cls.ptype.parts == pi:
        weight = Fraction(2, cls.norm_order)  # ||pi|| = 2 for (2,1)
        print(f"  type-(2,1) class {cls.label}: weight {weight}, Psi = {table.element(cls.index)}")

print()
print("=== gcd collapse on A(C3): Psi^2 = Psi^1 ===")
c3 = PermGroup.cyclic(3)
x = orbit_decompose(GSet.regular(c3))
print("Psi^2([C3/e]) =", eval_burnside(psi_upper(2), x))
print("Psi^4([C3/e]) =", eval_burnside(psi_upper(4), x), " (gcd(4,3) = 1 again)")
