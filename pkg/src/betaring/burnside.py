"""Concrete Burnside rings A(G): G-sets, orbit decomposition, marks, and
the power-quotient operations X^n/H together with their polynomial
extension to virtual elements.

G is any small materialized permutation group; its subgroup-class data
comes from the catalog machinery applied to G itself, so A(G) shares one
code path with the A(S_n) building blocks.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .catalog import Ambient, SubgroupClass, get_catalog
from .config import get_config
from .errors import IntegralityViolation, NotASubgroup, NotEffective, SizeCap
from .perms import PermGroup, Permutation, _compose


class GSet:
    """A finite left G-set given by the action of each group generator.

    The generator table is closed into a full element-action map on
    construction, which simultaneously verifies that the table respects
    every relation of the group.
    """

    __slots__ = ("group", "size", "gen_action", "elem_action")

    def __init__(self, group: PermGroup, size: int, gen_action):
        gen_action = tuple(tuple(row) for row in gen_action)
        if len(gen_action) != len(group.generators):
            raise ValueError("need one action row per group generator")
        for row in gen_action:
            if sorted(row) != list(range(size)):
                raise ValueError("generator action is not a bijection of the points")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "gen_action", gen_action)
        object.__setattr__(self, "elem_action", self._close())

    def __setattr__(self, name, value):
        raise AttributeError("GSet is immutable")

    def _close(self) -> dict:
        identity = tuple(range(self.group.degree))
        action = {identity: tuple(range(self.size))}
        frontier = [identity]
        gens = [(g.images, row) for g, row in zip(self.group.generators, self.gen_action)]
        while frontier:
            new = []
            for elem in frontier:
                act = action[elem]
                for gimg, grow in gens:
                    nelem = _compose(gimg, elem)
                    nact = tuple(grow[x] for x in act)
                    known = action.get(nelem)
                    if known is None:
                        action[nelem] = nact
                        new.append(nelem)
                    elif known != nact:
                        raise ValueError("action table violates a group relation")
            frontier = new
        return action

    @classmethod
    def empty(cls, group: PermGroup) -> GSet:
        return cls(group, 0, [() for _ in group.generators])

    @classmethod
    def point(cls, group: PermGroup) -> GSet:
        return cls(group, 1, [(0,) for _ in group.generators])

    @classmethod
    def regular(cls, group: PermGroup) -> GSet:
        """G acting on itself by left multiplication."""
        elems = sorted(group.elements)
        index = {e: i for i, e in enumerate(elems)}
        rows = [
            tuple(index[_compose(g.images, e)] for e in elems) for g in group.generators
        ]
        return cls(group, len(elems), rows)

    @classmethod
    def coset_space(cls, group: PermGroup, sub: PermGroup) -> GSet:
        """Left cosets gH with the left translation action."""
        if not sub.is_subgroup_of(group):
            raise NotASubgroup("coset space needs H <= G")
        elems = sorted(group.elements)
        coset_of = {}
        reps = []
        for e in elems:
            if e in coset_of:
                continue
            cid = len(reps)
            reps.append(e)
            for h in sub.elements:
                coset_of[_compose(e, h)] = cid
        rows = [
            tuple(coset_of[_compose(g.images, r)] for r in reps) for g in group.generators
        ]
        return cls(group, len(reps), rows)

    def act(self, elem, point: int) -> int:
        images = elem.images if isinstance(elem, Permutation) else tuple(elem)
        return self.elem_action[images][point]

    def __add__(self, other: GSet) -> GSet:
        if other.group != self.group:
            raise ValueError("disjoint union needs a common group")
        rows = [
            row + tuple(x + self.size for x in orow)
            for row, orow in zip(self.gen_action, other.gen_action)
        ]
        return GSet(self.group, self.size + other.size, rows)

    def __mul__(self, other: GSet) -> GSet:
        """Cartesian product with the diagonal action."""
        if other.group != self.group:
            raise ValueError("product needs a common group")
        size = self.size * other.size
        rows = []
        for row, orow in zip(self.gen_action, other.gen_action):
            rows.append(
                tuple(
                    row[i] * other.size + orow[j]
                    for i in range(self.size)
                    for j in range(other.size)
                )
            )
        return GSet(self.group, size, rows)

    def repeat(self, count: int) -> GSet:
        out = GSet.empty(self.group)
        for _ in range(count):
            out = out + self
        return out

    def restrict(self, sub: PermGroup) -> GSet:
        """The same points viewed as a U-set for U <= G."""
        if not sub.is_subgroup_of(self.group):
            raise NotASubgroup("restriction needs U <= G")
        rows = [self.elem_action[g.images] for g in sub.generators]
        return GSet(sub, self.size, rows)

    def orbits(self) -> list[list[int]]:
        seen = [False] * self.size
        out = []
        for start in range(self.size):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            frontier = [start]
            while frontier:
                new = []
                for pt in frontier:
                    for row in self.gen_action:
                        q = row[pt]
                        if not seen[q]:
                            seen[q] = True
                            orbit.append(q)
                            new.append(q)
                frontier = new
            out.append(sorted(orbit))
        return out

    def stabilizer(self, point: int) -> PermGroup:
        elems = [e for e, act in self.elem_action.items() if act[point] == point]
        return PermGroup.from_elements(self.group.degree, elems)

    def fixed_count(self, sub: PermGroup) -> int:
        rows = [self.elem_action[g.images] for g in sub.generators]
        return sum(1 for x in range(self.size) if all(row[x] == x for row in rows))

    def __eq__(self, other):
        return (
            isinstance(other, GSet)
            and self.group == other.group
            and self.size == other.size
            and self.gen_action == other.gen_action
        )

    def __repr__(self):
        return f"GSet(|X|={self.size} over group of order {self.group.order})"

    def to_json(self):
        return {
            "group": self.group.to_json(),
            "size": self.size,
            "action": [list(row) for row in self.gen_action],
        }

    @classmethod
    def from_json(cls, data) -> GSet:
        return cls(PermGroup.from_json(data["group"]), data["size"], data["action"])


def induce(group: PermGroup, sub: PermGroup, x: GSet) -> GSet:
    """The induced G-set G x_U X for X a U-set (transfer of G-sets)."""
    if x.group != sub or not sub.is_subgroup_of(group):
        raise NotASubgroup("induction needs X a U-set with U <= G")
    elems = sorted(group.elements)
    coset_of = {}
    reps = []
    for e in elems:
        if e in coset_of:
            continue
        coset_of[e] = len(reps)
        reps.append(e)
        for h in sub.elements:
            coset_of.setdefault(_compose(e, h), coset_of[e])
    rep_inv = []
    for r in reps:
        inv = [0] * len(r)
        for i, j in enumerate(r):
            inv[j] = i
        rep_inv.append(tuple(inv))
    # point (i, pt) is indexed i * x.size + pt
    rows = []
    for g in group.generators:
        row = [0] * (len(reps) * x.size)
        for i, r in enumerate(reps):
            t = _compose(g.images, r)
            j = coset_of[t]
            u = _compose(rep_inv[j], t)
            uact = x.elem_action[u]
            base = i * x.size
            jbase = j * x.size
            for pt in range(x.size):
                row[base + pt] = jbase + uact[pt]
        rows.append(tuple(row))
    return GSet(group, len(reps) * x.size, rows)


def group_catalog(group: PermGroup):
    return get_catalog(Ambient.of_group(group))


class BurnsideElement:
    """An integer vector over the subgroup classes of G (basis [G/H])."""

    __slots__ = ("catalog", "coords")

    def __init__(self, catalog, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(catalog.classes):
            raise ValueError("coordinate length does not match the class count")
        object.__setattr__(self, "catalog", catalog)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("BurnsideElement is immutable")

    @property
    def group(self) -> PermGroup:
        return self.catalog.group

    @classmethod
    def zero(cls, group: PermGroup) -> BurnsideElement:
        cat = group_catalog(group)
        return cls(cat, [0] * len(cat.classes))

    @classmethod
    def unit(cls, group: PermGroup) -> BurnsideElement:
        """[G/G], the one-point set."""
        cat = group_catalog(group)
        coords = [0] * len(cat.classes)
        coords[-1] = 1
        return cls(cat, coords)

    @classmethod
    def basis(cls, group: PermGroup, spec) -> BurnsideElement:
        cat = group_catalog(group)
        coords = [0] * len(cat.classes)
        coords[cat.class_index(spec)] = 1
        return cls(cat, coords)

    def _same_ring(self, other: BurnsideElement):
        if self.catalog is not other.catalog and self.group != other.group:
            raise ValueError("elements live in different Burnside rings")

    def __add__(self, other: BurnsideElement) -> BurnsideElement:
        self._same_ring(other)
        return BurnsideElement(self.catalog, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: BurnsideElement) -> BurnsideElement:
        self._same_ring(other)
        return BurnsideElement(self.catalog, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> BurnsideElement:
        return BurnsideElement(self.catalog, [-a for a in self.coords])

    def scale(self, k: int) -> BurnsideElement:
        return BurnsideElement(self.catalog, [k * a for a in self.coords])

    def marks(self) -> tuple[int, ...]:
        """Fixed-point counts per class: the ghost coordinates of A(G)."""
        matrix = self.catalog.matrix
        n = len(self.coords)
        return tuple(
            sum(self.coords[h] * matrix[h][k] for h in range(n)) for k in range(n)
        )

    @classmethod
    def from_marks(cls, catalog, marks) -> BurnsideElement:
        """Invert the (triangular) marks matrix; errors if non-integral."""
        matrix = catalog.matrix
        n = len(catalog.classes)
        coords = [Fraction(0)] * n
        for k in range(n - 1, -1, -1):
            acc = Fraction(marks[k])
            for h in range(k + 1, n):
                acc -= coords[h] * matrix[h][k]
            coords[k] = acc / matrix[k][k]
        if any(c.denominator != 1 for c in coords):
            raise IntegralityViolation("marks vector is not in the image of A(G)")
        return cls(catalog, [int(c) for c in coords])

    def __mul__(self, other: BurnsideElement) -> BurnsideElement:
        self._same_ring(other)
        marks = [a * b for a, b in zip(self.marks(), other.marks())]
        return BurnsideElement.from_marks(self.catalog, marks)

    def __eq__(self, other):
        return (
            isinstance(other, BurnsideElement)
            and self.group == other.group
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.group, self.coords))

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def size(self) -> int:
        """Total number of points of a realizing G-set."""
        g_order = self.group.order
        return sum(
            c * (g_order // cls.order) for c, cls in zip(self.coords, self.catalog.classes)
        )

    def to_gset(self) -> GSet:
        if not self.is_effective():
            raise NotEffective("only effective elements are realizable")
        out = GSet.empty(self.group)
        for c, cls in zip(self.coords, self.catalog.classes):
            if c:
                out = out + GSet.coset_space(self.group, cls.rep).repeat(c)
        return out

    def __repr__(self):
        if not any(self.coords):
            return "0"
        bits = []
        for c, cls in zip(self.coords, self.catalog.classes):
            if c:
                coeff = "" if c == 1 else f"{c}*"
                name = cls.aliases[0] if cls.aliases else cls.label
                bits.append(f"{coeff}[G/{name}]")
        return " + ".join(bits).replace("+ -", "- ")

    def to_json(self):
        return {
            "group": self.group.to_json(),
            "coords": list(self.coords),
            "basis": [cls.label for cls in self.catalog.classes],
        }


def orbit_decompose(x: GSet) -> BurnsideElement:
    """Write a G-set as a nonnegative sum of transitive classes [G/H]."""
    cat = group_catalog(x.group)
    coords = [0] * len(cat.classes)
    for orbit in x.orbits():
        stab = x.stabilizer(orbit[0])
        coords[cat.identify(stab)] += 1
    return BurnsideElement(cat, coords)


def multiply(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    return x * y


def _acting_group(h) -> PermGroup:
    if isinstance(h, SubgroupClass):
        return h.rep
    if isinstance(h, PermGroup):
        return h
    raise TypeError("expected a SubgroupClass or PermGroup")


def _tuple_orbit_quotient(factors: list[GSet], w: PermGroup) -> GSet:
    """Orbits of the coordinate-permuting group w on prod factors, with the
    diagonal action of the common G on orbit representatives."""
    if not factors:
        raise ValueError("empty factor list")
    group = factors[0].group
    total = 1
    for f in factors:
        total *= f.size
    cap = get_config().gset_cap
    if total > cap:
        raise SizeCap(f"tuple space has {total} points, cap is {cap}")
    n = len(factors)
    if w.degree != n:
        raise ValueError("coordinate group degree must match the factor count")
    inv_gens = [g.inverse().images for g in w.generators]
    orbit_of: dict = {}
    reps: list[tuple] = []
    for t in itertools.product(*[range(f.size) for f in factors]):
        if t in orbit_of:
            continue
        oid = len(reps)
        reps.append(t)
        orbit_of[t] = oid
        frontier = [t]
        while frontier:
            new = []
            for u in frontier:
                for ginv in inv_gens:
                    v = tuple(u[ginv[i]] for i in range(n))
                    if v not in orbit_of:
                        orbit_of[v] = oid
                        new.append(v)
            frontier = new
    rows = []
    for gi, g in enumerate(group.generators):
        fact_rows = [f.gen_action[gi] for f in factors]
        rows.append(
            tuple(orbit_of[tuple(row[x] for row, x in zip(fact_rows, t))] for t in reps)
        )
    return GSet(group, len(reps), rows)


def beta_on_gset(h, x: GSet) -> GSet:
    """X^n / H for H <= S_n: H permutes coordinates, G acts diagonally."""
    w = _acting_group(h)
    n = w.degree
    if n == 0:
        return GSet.point(x.group)
    return _tuple_orbit_quotient([x] * n, w)


def beta2_on_gsets(l, x: GSet, y: GSet) -> GSet:
    """(X^p x Y^q) / L for L <= S_p x S_q, with the diagonal G-action."""
    if isinstance(l, SubgroupClass):
        p, q = l.ambient.degrees
        w = l.rep
    else:
        raise TypeError("beta2 needs a SubgroupClass of a pair ambient")
    if x.group != y.group:
        raise ValueError("X and Y must be sets over the same group")
    if p + q == 0:
        return GSet.point(x.group)
    return _tuple_orbit_quotient([x] * p + [y] * q, w)


def beta_on_element(h, x: BurnsideElement) -> BurnsideElement:
    """Effective-argument beta: realize, quotient the power, decompose."""
    w = _acting_group(h)
    if w.degree == 0:
        return BurnsideElement.unit(x.group)
    return orbit_decompose(beta_on_gset(w, x.to_gset()))


def beta_virtual(h, x: BurnsideElement) -> BurnsideElement:
    """The unique degree-n polynomial extension of X -> X^n/H to all of A(G).

    Effective arguments take the direct route.  Otherwise write
    x = plus - minus with both parts effective, evaluate
    g(k) = beta(plus + k*minus) at k = 0..n, and extrapolate the
    degree-<=n polynomial to k = -1 by Newton forward differences.
    """
    w = _acting_group(h)
    n = w.degree
    if x.is_effective():
        return beta_on_element(w, x)
    plus = BurnsideElement(x.catalog, [max(c, 0) for c in x.coords])
    minus = BurnsideElement(x.catalog, [max(-c, 0) for c in x.coords])
    values = [beta_on_element(w, plus + minus.scale(k)) for k in range(n + 1)]
    result = values[0]
    diffs = values
    sign = -1
    for _ in range(n):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        result = result + diffs[0].scale(sign)
        sign = -sign
    return result
