"""The graded ring of symmetric-group Burnside classes and its bigraded
companion: products, the restriction diagonal, composition, and the
evaluation homomorphisms into A(G) and the integers.

Basis elements are subgroup classes beta_H, H <= S_n, indexed by
(degree, catalog index).  The product embeds H x K block-diagonally; the
diagonal restricts coset spaces along S_p x S_q by double cosets; the
composition sends (beta_H, beta_K) to the class of the wreath product
with H permuting deg(H) blocks and K acting inside each block, extended
to sums by splitting H over the summands and to virtual arguments by
Newton extrapolation in each degree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .burnside import BurnsideElement, beta_virtual
from .catalog import Ambient, Catalog, get_catalog
from .config import get_config
from .errors import DegreeCap, IntegralityViolation, NotEffective
from .perms import PermGroup, direct_embed, mixed_wreath, wreath


def sym_catalog(n: int) -> Catalog:
    return get_catalog(Ambient.sym(n))


def _check_degree(n: int):
    if n > get_config().max_degree:
        raise DegreeCap(f"degree {n} exceeds max_degree {get_config().max_degree}")


def _norm_coeff(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else c


class BElement:
    """A finitely supported combination of classes (degree, class index)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            c = _norm_coeff(c)
            if c:
                clean[tuple(key)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BElement is immutable")

    @classmethod
    def zero(cls) -> BElement:
        return cls()

    @classmethod
    def one(cls) -> BElement:
        return cls({(0, 0): 1})

    @classmethod
    def basis(cls, n: int, spec) -> BElement:
        _check_degree(n)
        return cls({(n, sym_catalog(n).class_index(spec)): 1})

    def __add__(self, other: BElement) -> BElement:
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BElement(out)

    def __sub__(self, other: BElement) -> BElement:
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) - c
        return BElement(out)

    def __neg__(self) -> BElement:
        return BElement({k: -c for k, c in self.terms.items()})

    def scale(self, scalar) -> BElement:
        return BElement({k: c * Fraction(scalar) for k, c in self.terms.items()})

    def __mul__(self, other: BElement) -> BElement:
        return product(self, other)

    def __eq__(self, other):
        return isinstance(other, BElement) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def is_effective(self) -> bool:
        return all(isinstance(c, int) and c >= 0 for c in self.terms.values())

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def degrees(self) -> set[int]:
        return {n for (n, _) in self.terms}

    def max_degree(self) -> int:
        return max((n for (n, _) in self.terms), default=0)

    def component(self, n: int) -> BElement:
        return BElement({k: c for k, c in self.terms.items() if k[0] == n})

    def label_of(self, key) -> str:
        n, idx = key
        cls = sym_catalog(n).classes[idx]
        name = cls.aliases[0] if cls.aliases else cls.label
        return f"S{n}:{name}"

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            c = self.terms[key]
            if key == (0, 0):
                bits.append(f"{c}")
            elif c == 1:
                bits.append(f"b[{self.label_of(key)}]")
            else:
                bits.append(f"{c}*b[{self.label_of(key)}]")
        return " + ".join(bits).replace("+ -", "- ")

    def to_json(self):
        out = []
        for (n, idx) in sorted(self.terms):
            c = self.terms[(n, idx)]
            cls = sym_catalog(n).classes[idx]
            entry = {"degree": n, "class_index": idx, "class_label": cls.label}
            if isinstance(c, Fraction):
                entry["coeff"] = [c.numerator, c.denominator]
            else:
                entry["coeff"] = c
            out.append(entry)
        return out

    @classmethod
    def from_json(cls, data) -> BElement:
        terms = {}
        for entry in data:
            c = entry["coeff"]
            if isinstance(c, list):
                c = Fraction(c[0], c[1])
            terms[(entry["degree"], entry["class_index"])] = c
        return cls(terms)


def beta_upper(n: int) -> BElement:
    """beta^n: the class of the full group S_n (the trivial S_n-set)."""
    _check_degree(n)
    cat = sym_catalog(n)
    return BElement({(n, len(cat.classes) - 1): 1})


def beta_regular(n: int) -> BElement:
    """The class of the trivial subgroup of S_n (the free S_n-set)."""
    return BElement.basis(n, "e")


class B2Element:
    """A combination of classes of subgroups of S_p x S_q, keyed by
    ((p, q), class index)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            c = _norm_coeff(c)
            if c:
                (p, q), idx = key
                clean[((p, q), idx)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("B2Element is immutable")

    @classmethod
    def zero(cls) -> B2Element:
        return cls()

    @classmethod
    def basis(cls, p: int, q: int, spec) -> B2Element:
        _check_degree(p + q)
        cat = get_catalog(Ambient.pair(p, q))
        return cls({((p, q), cat.class_index(spec)): 1})

    def __add__(self, other: B2Element) -> B2Element:
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return B2Element(out)

    def __sub__(self, other: B2Element) -> B2Element:
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) - c
        return B2Element(out)

    def scale(self, scalar) -> B2Element:
        return B2Element({k: c * Fraction(scalar) for k, c in self.terms.items()})

    def __mul__(self, other: B2Element) -> B2Element:
        out = {}
        for ((p, q), i), c1 in self.terms.items():
            for ((r, s), j), c2 in other.terms.items():
                key = _b2_basis_product(p, q, i, r, s, j)
                out[key] = out.get(key, 0) + c1 * c2
        return B2Element(out)

    def __eq__(self, other):
        return isinstance(other, B2Element) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            (p, q), idx = key
            c = self.terms[key]
            cls = get_catalog(Ambient.pair(p, q)).classes[idx]
            name = cls.aliases[0] if cls.aliases else cls.label
            coeff = "" if c == 1 else f"{c}*"
            bits.append(f"{coeff}b2[S{p}xS{q}:{name}]")
        return " + ".join(bits).replace("+ -", "- ")

    def to_json(self):
        out = []
        for ((p, q), idx) in sorted(self.terms):
            c = self.terms[((p, q), idx)]
            cls = get_catalog(Ambient.pair(p, q)).classes[idx]
            entry = {
                "bidegree": [p, q],
                "class_index": idx,
                "class_label": cls.label,
                "coeff": [c.numerator, c.denominator] if isinstance(c, Fraction) else c,
            }
            out.append(entry)
        return out


@lru_cache(maxsize=None)
def _basis_product(n: int, i: int, m: int, j: int) -> tuple[int, int]:
    _check_degree(n + m)
    h = sym_catalog(n).classes[i].rep
    k = sym_catalog(m).classes[j].rep
    embedded = direct_embed(h, k)
    return (n + m, sym_catalog(n + m).identify(embedded))


def product(a: BElement, b: BElement) -> BElement:
    """Bilinear extension of beta_H * beta_K = beta_{H x K}."""
    out = {}
    for (n, i), ca in a.terms.items():
        for (m, j), cb in b.terms.items():
            key = _basis_product(n, i, m, j)
            out[key] = out.get(key, 0) + ca * cb
    return BElement(out)


def _permute_points(group: PermGroup, mapping: list[int], degree: int) -> PermGroup:
    """Relabel the points of a group through an injective point map."""
    gens = []
    for g in group.generators:
        images = list(range(degree))
        for i, j in enumerate(g.images):
            images[mapping[i]] = mapping[j]
        gens.append(images)
    elements = set()
    for e in group.elements:
        images = list(range(degree))
        for i, j in enumerate(e):
            images[mapping[i]] = mapping[j]
        elements.add(tuple(images))
    from .perms import Permutation

    return PermGroup(degree, [Permutation(g) for g in gens], elements)


@lru_cache(maxsize=None)
def _b2_basis_product(p: int, q: int, i: int, r: int, s: int, jj: int):
    """(p,q)-class times (r,s)-class lands in bidegree (p+r, q+s)."""
    _check_degree(p + q + r + s)
    left = get_catalog(Ambient.pair(p, q)).classes[i].rep
    right = get_catalog(Ambient.pair(r, s)).classes[jj].rep
    degree = p + q + r + s
    lmap = [x if x < p else (p + r) + (x - p) for x in range(p + q)]
    rmap = [p + x if x < r else (p + r + q) + (x - r) for x in range(r + s)]
    lg = _permute_points(left, lmap, degree)
    rg = _permute_points(right, rmap, degree)
    combined = PermGroup.from_elements(
        degree,
        {_compose_tuples(e, f) for e in lg.elements for f in rg.elements},
        generators=list(lg.generators) + list(rg.generators),
    )
    cat = get_catalog(Ambient.pair(p + r, q + s))
    return ((p + r, q + s), cat.identify(combined))


def _compose_tuples(a: tuple, b: tuple) -> tuple:
    return tuple(a[i] for i in b)


@lru_cache(maxsize=None)
def _refine_terms(ambient: Ambient, idx: int, flat_parts: tuple[int, ...]):
    """Restrict a subgroup class along a block-product subgroup.

    flat_parts must refine the ambient's factor degrees consecutively.
    Returns ((class index in the prod(flat_parts) catalog, multiplicity), ...)
    computed over double cosets P \\ G / H with the stabilizer rule
    P meet sigma H sigma^{-1}.
    """
    cat = get_catalog(ambient)
    cuts = set()
    acc = 0
    for d in cat.ambient.degrees:
        acc += d
        cuts.add(acc)
    running = {0}
    total = 0
    for part in flat_parts:
        total += part
        running.add(total)
    if total != cat.group.degree or not cuts <= running:
        raise ValueError(f"refinement {flat_parts} does not respect {cat.ambient.degrees}")
    table = cat.table
    h_set = frozenset(table.index[e] for e in cat.classes[idx].rep.elements)
    sub_ambient = Ambient.prod(flat_parts)
    p_group = sub_ambient.build_group()
    p_set = frozenset(table.index[e] for e in p_group.elements)
    mul = table.mul
    inv = table.inv
    covered = bytearray(table.order)
    out: dict[int, int] = {}
    sub_cat = get_catalog(sub_ambient)
    p_sorted = sorted(p_set)
    h_sorted = sorted(h_set)
    for g in range(table.order):
        if covered[g]:
            continue
        for x in p_sorted:
            m = mul[x][g]
            row = mul[m]
            for y in h_sorted:
                covered[row[y]] = 1
        gi = inv[g]
        conj = frozenset(mul[mul[g][h]][gi] for h in h_sorted)
        inter = conj & p_set
        sub = PermGroup.from_elements(table.group.degree, [table.elements[e] for e in inter])
        cidx = sub_cat.identify(sub)
        out[cidx] = out.get(cidx, 0) + 1
    return tuple(sorted(out.items()))


def diagonal(a: BElement) -> B2Element:
    """Restriction along all S_p x S_q <= S_n, by double cosets."""
    out = {}
    for (n, i), c in a.terms.items():
        for p in range(n + 1):
            q = n - p
            for cidx, mult in _refine_terms(Ambient.sym(n), i, (p, q)):
                key = ((p, q), cidx)
                out[key] = out.get(key, 0) + c * mult
    return B2Element(out)


def diagonal_multi(a: BElement, r: int) -> dict:
    """r-fold diagonal: terms over compositions of each degree into r parts.

    Returns {(composition, class index in the prod catalog): coefficient}.
    """
    if r < 1:
        raise ValueError("need at least one part")
    out: dict = {}
    for (n, i), c in a.terms.items():
        for comp in _compositions(n, r):
            for cidx, mult in _refine_terms(Ambient.sym(n), i, comp):
                key = (comp, cidx)
                out[key] = out.get(key, 0) + c * mult
    return out


def _compositions(n: int, r: int):
    if r == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, r - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _star_basis_key(m: int, i: int, n: int, j: int) -> tuple[int, int]:
    _check_degree(m * n)
    h = sym_catalog(m).classes[i].rep
    k = sym_catalog(n).classes[j].rep
    w = wreath(k, h)  # h permutes m blocks, k acts inside each block of size n
    return (w.degree, sym_catalog(w.degree).identify(w))


def star_basis(h_spec, k_spec) -> BElement:
    """The composition on basis classes: the class of the wreath product."""
    (m, i) = _as_key(h_spec)
    (n, j) = _as_key(k_spec)
    return BElement({_star_basis_key(m, i, n, j): 1})


def _as_key(spec) -> tuple[int, int]:
    if isinstance(spec, BElement):
        if len(spec.terms) != 1:
            raise ValueError("expected a single basis class")
        key, c = next(iter(spec.terms.items()))
        if c != 1:
            raise ValueError("expected a coefficient-one basis class")
        return key
    n, rest = spec
    return (n, sym_catalog(n).class_index(rest))


def star_effective(a: BElement, b: BElement) -> BElement:
    """a * b for b a genuine sum of classes (nonnegative coefficients).

    Splits each beta_H over the list of summands of b with the iterated
    diagonal, then assembles each term as a mixed wreath product: the
    restricted class permutes same-size blocks and each summand acts
    inside its own blocks.
    """
    if not b.is_effective():
        raise NotEffective("second argument must have nonnegative integer coefficients")
    summands = []
    for key in sorted(b.terms):
        summands.extend([key] * b.terms[key])
    r = len(summands)
    out = BElement.zero()
    for (n, i), c in a.terms.items():
        if r == 0:
            if n == 0:
                out = out + BElement.one().scale(c)
            continue
        for comp in _compositions(n, r):
            positions = [t for t, p in enumerate(comp) if p > 0]
            sub_parts = tuple(comp[t] for t in positions)
            inners = [sym_catalog(summands[t][0]).classes[summands[t][1]].rep for t in positions]
            if not positions:
                if n == 0:
                    out = out + BElement.one().scale(c)
                continue
            for cidx, mult in _refine_terms(Ambient.sym(n), i, sub_parts):
                l_rep = get_catalog(Ambient.prod(sub_parts)).classes[cidx].rep
                grown = mixed_wreath(l_rep, sub_parts, inners)
                key = (grown.degree, sym_catalog(grown.degree).identify(grown))
                out = out + BElement({key: c * mult})
    return out


def star(a: BElement, b: BElement) -> BElement:
    """Composition, extended to virtual b by per-degree Newton extrapolation."""
    if b.is_effective():
        return star_effective(a, b)
    if not b.is_integral():
        raise NotEffective("composition needs integer coefficients in b")
    plus = BElement({k: c for k, c in b.terms.items() if c > 0})
    minus = BElement({k: -c for k, c in b.terms.items() if c < 0})
    out = BElement.zero()
    for (n, i), c in a.terms.items():
        basis = BElement({(n, i): 1})
        values = [star_effective(basis, plus + minus.scale(k)) for k in range(n + 1)]
        acc = values[0]
        diffs = values
        sign = -1
        for _ in range(n):
            diffs = [y - x for x, y in zip(diffs, diffs[1:])]
            acc = acc + diffs[0].scale(sign)
            sign = -sign
        out = out + acc.scale(c)
    return out


@lru_cache(maxsize=None)
def _cycle_count_census(n: int, i: int) -> tuple[tuple[int, int], ...]:
    """((k, c_k), ...): c_k elements of the class representative have k cycles."""
    rep = sym_catalog(n).classes[i].rep
    census: dict[int, int] = {}
    for g in rep:
        k = len(g.cycles())
        census[k] = census.get(k, 0) + 1
    return tuple(sorted(census.items()))


def eval_z(a: BElement, r: int):
    """The ring map to Z: beta_H(r) = (1/|H|) sum_k c_k r^k."""
    total = Fraction(0)
    for (n, i), c in a.terms.items():
        order = sym_catalog(n).classes[i].order
        census = _cycle_count_census(n, i)
        total += Fraction(c) * Fraction(sum(ck * r**k for k, ck in census), order)
    if total.denominator != 1:
        raise IntegralityViolation(f"eval_z produced {total}")
    return int(total)


def eval_burnside(a: BElement, x: BurnsideElement) -> BurnsideElement:
    """Act on A(G) through the polynomial beta operations."""
    if not a.is_integral():
        raise IntegralityViolation("eval on A(G) needs integer coefficients")
    out = BurnsideElement.zero(x.group)
    for (n, i), c in a.terms.items():
        cls = sym_catalog(n).classes[i]
        out = out + beta_virtual(cls, x).scale(c)
    return out
