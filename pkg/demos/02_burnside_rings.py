"""Walkthrough: the Burnside ring A(G) and the power-quotient operations.

A(G) is the free abelian group on transitive G-sets [G/H], with marks
(fixed-point counts) as ghost coordinates.  The operations send a set X
to X^n/H for a subgroup H of S_n; on virtual elements they act through
the unique polynomial extension.
"""

from betaring import (
    Ambient,
    BurnsideElement,
    GSet,
    PermGroup,
    beta_on_gset,
    beta_virtual,
    get_catalog,
    group_catalog,
    orbit_decompose,
)

c3 = PermGroup.cyclic(3)
print("=== A(C3) ===")
cat = group_catalog(c3)
print("basis classes:", [cls.aliases[0] if cls.aliases else cls.label for cls in cat.classes])

regular = GSet.regular(c3)
x = orbit_decompose(regular)
print("regular set decomposes as:", x)
print("marks of [C3/e]:", x.marks())
print("[C3/e]^2 =", x * x)

print()
print("=== power quotients ===")
s2 = get_catalog(Ambient.sym(2)).class_of("S2")
pairs = beta_on_gset(s2, regular)
print(f"unordered pairs (with repeats) from the regular set: {pairs.size} points")
print("decomposition:", orbit_decompose(pairs))

print()
print("=== the polynomial extension ===")
trivial = PermGroup.trivial(1)
cat_z = group_catalog(trivial)  # A(trivial) is the integers
for r in range(-4, 1):
    value = beta_virtual(s2, BurnsideElement(cat_z, [r]))
    print(f"  symmetric square at {r:>2}: {value.coords[0]:>3}   (r(r+1)/2 = {r * (r + 1) // 2})")

print()
print("=== Psi^2 = 2*(symmetric square) - (cartesian square) is the identity on A(C3) ===")
e2 = get_catalog(Ambient.sym(2)).class_of("e")
psi2 = beta_virtual(s2, x).scale(2) - beta_virtual(e2, x)
print("Psi^2([C3/e]) =", psi2, "  equal to [C3/e]:", psi2 == x)
