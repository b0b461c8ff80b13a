"""Walkthrough: big Witt vectors and the second diagonal.

Truncated series 1 + a1 t + ... add by multiplying as series; the ghost
map turns the ring multiplication into pointwise products.  The same
universal product polynomials give the ring-scheme comultiplication on
the symmetric-function side.
"""

from betaring import WittVector, delta_m
from betaring.witt import eps_product

print("=== arithmetic at precision 4 ===")
a = WittVector([1, 0, 0, 0], 4)
print("a      =", a)
print("a + a  =", a + a, "  (series product)")
print("a * a  =", a * a)
print("unit   =", WittVector.one(4), "  ghost:", [str(g) for g in WittVector.one(4).ghost()])
print("ghost(a) =", [str(g) for g in a.ghost()])

b = WittVector([2, -1, 3, 0], 4)
c = WittVector([1, 1, -2, 5], 4)
print()
print("b * c  =", b * c)
print("ghost multiplies pointwise:",
      [str(x * y) for x, y in zip(b.ghost(), c.ghost())] == [str(g) for g in (b * c).ghost()])

print()
print("=== the universal product polynomials ===")
print("P1(a;b) = a1*b1, e.g. P1(3;5) =", eps_product([3], [5])[0])
print("P2 row of values:", [str(v) for v in eps_product([3, 1], [5, 2])])

print()
print("=== the second diagonal on the elementary generators ===")
for n in (1, 2, 3):
    print(f"delta_m(e_{n}) =", delta_m(n))
image_of_p2 = delta_m(1) * delta_m(1) - delta_m(2).scale(2)  # p2 = e1^2 - 2 e2
print("and power sums go to squares: delta_m(p_2) =", image_of_p2.convert("p"))
