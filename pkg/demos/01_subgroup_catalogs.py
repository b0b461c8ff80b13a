"""Walkthrough: subgroup-class catalogs and tables of marks.

Every basis element downstream is a conjugacy class of subgroups of a
symmetric group (or of a product of two of them).  This demo builds the
catalogs for small ambients, prints the classic table of marks of S3,
and shows how an arbitrary subgroup is located in its catalog.
"""

from betaring import Ambient, PermGroup, Permutation, get_catalog, table_of_marks, wreath

print("=== class counts for the small symmetric groups ===")
for n in range(1, 6):
    cat = get_catalog(Ambient.sym(n))
    print(f"S{n}: {len(cat.classes):>3} subgroup classes, {cat.subgroup_count:>4} subgroups in total")

print()
print("=== the table of marks of S3 ===")
tom = table_of_marks(Ambient.sym(3))
for cls, row in zip(tom.classes, tom.matrix):
    name = cls.aliases[0] if cls.aliases else cls.label
    print(f"  {name:<4} {list(row)}   (order {cls.order}, normalizer {cls.norm_order})")
print("rows are coset spaces S3/H, columns count K-fixed points")

print()
print("=== identification by mark vectors ===")
cat4 = get_catalog(Ambient.sym(4))
normal_klein = PermGroup.generate(4, [Permutation.parse(4, "(0 1)(2 3)"), Permutation.parse(4, "(0 2)(1 3)")])
split_klein = PermGroup.generate(4, [Permutation.parse(4, "(0 1)"), Permutation.parse(4, "(2 3)")])
for name, sub in [("normal Klein", normal_klein), ("split Klein", split_klein)]:
    idx = cat4.identify(sub)
    print(f"  {name}: class {cat4.classes[idx].label} with marks {list(cat4.classes[idx].marks)}")
print("both have order 4, but their mark vectors separate them")

sylow = wreath(PermGroup.symmetric(2), PermGroup.symmetric(2))
print(f"  wreath S2 wr S2 -> class {cat4.classes[cat4.identify(sylow)].label} (order 8)")

print()
print("=== a product ambient ===")
pair = get_catalog(Ambient.pair(2, 2))
print(f"S2 x S2 has {len(pair.classes)} subgroup classes:")
for cls in pair.classes:
    print(f"  {cls.label:<12} order {cls.order}")
