"""Symmetric functions over exact rationals in the e / h / p bases.

An element is a finitely supported map from partitions to Fractions,
tagged with its basis; the basis elements b_pi = prod_i b_{pi_i} are
multiplicative, so products just merge partitions.  Conversions run
through the Newton identities and round-trip exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import IntegralityViolation
from .perms import Partition, PermGroup, partitions

BASES = ("e", "h", "p")


def _merge(a: Partition, b: Partition) -> Partition:
    return Partition(a.parts + b.parts)


def _poly_add(acc: dict, other: dict, scale=1):
    for key, c in other.items():
        v = acc.get(key, 0) + c * scale
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)
    return acc


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = _merge(ka, kb)
            v = out.get(key, 0) + ca * cb
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


_EMPTY = Partition()


def _single(n: int, basis_from: str, basis_to: str) -> dict:
    return dict(_single_cached(n, basis_from, basis_to))


@lru_cache(maxsize=None)
def _single_cached(n: int, basis_from: str, basis_to: str):
    """Expansion of the degree-n generator of one basis in another basis."""
    if n == 0:
        return ((_EMPTY, Fraction(1)),)
    if basis_from == basis_to:
        return ((Partition([n]), Fraction(1)),)
    out: dict = {}
    if basis_to == "p":
        # h_n = sum_pi p_pi / z_pi ; e_n gets the sign (-1)^(n - length)
        for pi in partitions(n):
            sign = 1 if basis_from == "h" else (-1) ** (n - len(pi))
            _poly_add(out, {pi: Fraction(sign, pi.centralizer_order())})
    elif basis_from == "p":
        # Newton: p_n = n b_n - sum_{i<n} (+-) p_i b_{n-i}, b in {h, e}
        sign = 1 if basis_to == "h" else (-1) ** (n - 1)
        out = {Partition([n]): Fraction(n * sign)}
        for i in range(1, n):
            term = _poly_mul(
                _single(i, "p", basis_to), {Partition([n - i]): Fraction(1)}
            )
            step = 1 if basis_to == "h" else (-1) ** (i - 1)
            _poly_add(out, term, scale=-sign * step)
    else:
        # h<->e: b_n = sum_{i=1..n} (-1)^(i-1) c_i b_{n-i}
        out = {}
        for i in range(1, n + 1):
            term = _poly_mul(
                {Partition([i]): Fraction(1)}, _single(n - i, basis_from, basis_to)
            )
            _poly_add(out, term, scale=(-1) ** (i - 1))
    return tuple(sorted(out.items(), key=lambda kv: kv[0].parts))


class SymFunc:
    """A symmetric function committed to one of the e / h / p bases."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}")
        clean = {}
        for key, c in (coeffs or {}).items():
            if not isinstance(key, Partition):
                key = Partition(key)
            c = Fraction(c)
            if c:
                clean[key] = c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    @classmethod
    def zero(cls, basis: str = "p") -> SymFunc:
        return cls(basis)

    @classmethod
    def one(cls, basis: str = "p") -> SymFunc:
        return cls(basis, {_EMPTY: 1})

    @classmethod
    def generator(cls, basis: str, n: int) -> SymFunc:
        if n == 0:
            return cls.one(basis)
        return cls(basis, {Partition([n]): 1})

    @classmethod
    def monomial(cls, basis: str, pi, coeff=1) -> SymFunc:
        return cls(basis, {Partition(pi): coeff})

    def __add__(self, other: SymFunc) -> SymFunc:
        other = other.convert(self.basis)
        return SymFunc(self.basis, _poly_add(dict(self.coeffs), other.coeffs))

    def __sub__(self, other: SymFunc) -> SymFunc:
        other = other.convert(self.basis)
        return SymFunc(self.basis, _poly_add(dict(self.coeffs), other.coeffs, scale=-1))

    def __neg__(self) -> SymFunc:
        return SymFunc(self.basis, {k: -c for k, c in self.coeffs.items()})

    def scale(self, scalar) -> SymFunc:
        return SymFunc(self.basis, {k: c * Fraction(scalar) for k, c in self.coeffs.items()})

    def __mul__(self, other: SymFunc) -> SymFunc:
        other = other.convert(self.basis)
        return SymFunc(self.basis, _poly_mul(self.coeffs, other.coeffs))

    def convert(self, target: str) -> SymFunc:
        """Rewrite in the target basis; exact, and a round trip is identity."""
        if target == self.basis:
            return self
        out: dict = {}
        for pi, c in self.coeffs.items():
            term = {_EMPTY: Fraction(1)}
            for part in pi.parts:
                term = _poly_mul(term, _single(part, self.basis, target))
            _poly_add(out, term, scale=c)
        return SymFunc(target, out)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.convert("p").coeffs == other.convert("p").coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def degrees(self) -> set[int]:
        return {pi.n for pi in self.coeffs}

    def component(self, n: int) -> SymFunc:
        return SymFunc(self.basis, {pi: c for pi, c in self.coeffs.items() if pi.n == n})

    def coefficient(self, pi) -> Fraction:
        return self.coeffs.get(Partition(pi), Fraction(0))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for pi, c in sorted(self.coeffs.items(), key=lambda kv: (kv[0].n, kv[0].parts)):
            name = f"{self.basis}[{','.join(map(str, pi.parts))}]" if pi.parts else "1"
            bits.append(f"({c})*{name}" if c != 1 else name)
        return " + ".join(bits)

    def to_json(self):
        return {
            "basis": self.basis,
            "terms": [
                {"partition": list(pi.parts), "numerator": c.numerator, "denominator": c.denominator}
                for pi, c in sorted(self.coeffs.items(), key=lambda kv: (kv[0].n, kv[0].parts))
            ],
        }

    @classmethod
    def from_json(cls, data) -> SymFunc:
        coeffs = {
            Partition(t["partition"]): Fraction(t["numerator"], t["denominator"])
            for t in data["terms"]
        }
        return cls(data["basis"], coeffs)


def e_(n: int) -> SymFunc:
    return SymFunc.generator("e", n)


def h_(n: int) -> SymFunc:
    return SymFunc.generator("h", n)


def p_(n: int) -> SymFunc:
    return SymFunc.generator("p", n)


def convert(f: SymFunc, target: str) -> SymFunc:
    return f.convert(target)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    return f * g


class SymFunc2:
    """An element of the tensor square, supported on pairs of partitions."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}")
        clean = {}
        for (a, b), c in (coeffs or {}).items():
            a = a if isinstance(a, Partition) else Partition(a)
            b = b if isinstance(b, Partition) else Partition(b)
            c = Fraction(c)
            if c:
                clean[(a, b)] = c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc2 is immutable")

    @classmethod
    def tensor(cls, f: SymFunc, g: SymFunc) -> SymFunc2:
        f = f.convert("p")
        g = g.convert("p")
        return cls(
            "p",
            {
                (a, b): ca * cb
                for a, ca in f.coeffs.items()
                for b, cb in g.coeffs.items()
            },
        )

    def __add__(self, other: SymFunc2) -> SymFunc2:
        other = other.convert(self.basis)
        return SymFunc2(self.basis, _poly_add(dict(self.coeffs), other.coeffs))

    def __sub__(self, other: SymFunc2) -> SymFunc2:
        other = other.convert(self.basis)
        return SymFunc2(self.basis, _poly_add(dict(self.coeffs), other.coeffs, scale=-1))

    def scale(self, scalar) -> SymFunc2:
        return SymFunc2(self.basis, {k: c * Fraction(scalar) for k, c in self.coeffs.items()})

    def __mul__(self, other: SymFunc2) -> SymFunc2:
        other = other.convert(self.basis)
        out: dict = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                key = (_merge(a1, a2), _merge(b1, b2))
                v = out.get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return SymFunc2(self.basis, out)

    def convert(self, target: str) -> SymFunc2:
        if target == self.basis:
            return self
        out: dict = {}
        for (a, b), c in self.coeffs.items():
            left = SymFunc(self.basis, {a: 1}).convert(target)
            right = SymFunc(self.basis, {b: 1}).convert(target)
            for ka, ca in left.coeffs.items():
                for kb, cb in right.coeffs.items():
                    key = (ka, kb)
                    v = out.get(key, 0) + c * ca * cb
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
        return SymFunc2(target, out)

    def __eq__(self, other):
        if not isinstance(other, SymFunc2):
            return NotImplemented
        return self.convert("p").coeffs == other.convert("p").coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def swap(self) -> SymFunc2:
        return SymFunc2(self.basis, {(b, a): c for (a, b), c in self.coeffs.items()})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for (a, b), c in sorted(self.coeffs.items(), key=lambda kv: (kv[0][0].parts, kv[0][1].parts)):
            na = f"{self.basis}[{','.join(map(str, a.parts))}]" if a.parts else "1"
            nb = f"{self.basis}[{','.join(map(str, b.parts))}]" if b.parts else "1"
            bits.append(f"({c})*{na}(x){nb}")
        return " + ".join(bits)


def _binomial(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def coproduct(f: SymFunc) -> SymFunc2:
    """The diagonal with every p_k primitive; result in f's basis."""
    fp = f.convert("p")
    out: dict = {}
    for pi, c in fp.coeffs.items():
        splits = {( _EMPTY, _EMPTY): Fraction(1)}
        for part, m in pi.multiplicities().items():
            step: dict = {}
            for (left, right), w in splits.items():
                for j in range(m + 1):
                    key = (
                        Partition(left.parts + (part,) * j),
                        Partition(right.parts + (part,) * (m - j)),
                    )
                    step[key] = step.get(key, 0) + w * _binomial(m, j)
            splits = step
        for key, w in splits.items():
            v = out.get(key, 0) + c * w
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return SymFunc2("p", out).convert(f.basis)


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """Composition f o g: an algebra map in f with p_k o g scaling parts by k."""
    fp = f.convert("p")
    gp = g.convert("p")
    out: dict = {}
    for pi, c in fp.coeffs.items():
        term = {_EMPTY: Fraction(1)}
        for part in pi.parts:
            scaled = {Partition(tuple(part * q for q in mu.parts)): w for mu, w in gp.coeffs.items()}
            term = _poly_mul(term, scaled)
        _poly_add(out, term, scale=c)
    return SymFunc("p", out)


def cycle_index(group: PermGroup) -> SymFunc:
    """(1/|H|) sum of p_{cycle type} over the group, in the p basis."""
    out: dict = {}
    weight = Fraction(1, group.order)
    for g in group:
        pi = g.cycle_type()
        out[pi] = out.get(pi, 0) + weight
    return SymFunc("p", out)


def cycle_index_pair(group: PermGroup, p: int, q: int) -> SymFunc2:
    """Two-family cycle index of a subgroup of S_p x S_q, split at point p."""
    out: dict = {}
    weight = Fraction(1, group.order)
    for g in group:
        left = []
        right = []
        for cyc in g.cycles():
            (left if cyc[0] < p else right).append(len(cyc))
        key = (Partition(left), Partition(right))
        out[key] = out.get(key, 0) + weight
    return SymFunc2("p", out)


_LIN_CACHE: dict = {}


def lin(a) -> SymFunc:
    """The linearization map from the graded Burnside-class ring: each basis
    class goes to the cycle index of a representative subgroup."""
    from . import bring

    out = SymFunc.zero("p")
    for (n, idx), coeff in a.terms.items():
        key = (n, idx)
        if key not in _LIN_CACHE:
            cls = bring.sym_catalog(n).classes[idx]
            _LIN_CACHE[key] = cycle_index(cls.rep)
        out = out + _LIN_CACHE[key].scale(coeff)
    return out


def lin2(b) -> SymFunc2:
    """Linearization of a bigraded element, one variable family per factor."""
    from . import bring

    out = SymFunc2("p")
    for ((p, q), idx), coeff in b.terms.items():
        from .catalog import Ambient, get_catalog

        cls = get_catalog(Ambient.pair(p, q)).classes[idx]
        out = out + cycle_index_pair(cls.rep, p, q).scale(coeff)
    return out


def _det(rows) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def generator_check(n: int) -> dict:
    """Unimodularity of the degree-n e<->h transition matrices."""
    pis = sorted(partitions(n), key=lambda pi: pi.parts)
    col = {pi: i for i, pi in enumerate(pis)}

    def matrix(src, dst):
        rows = []
        for pi in pis:
            vec = [Fraction(0)] * len(pis)
            expanded = SymFunc.monomial(src, pi).convert(dst)
            for mu, c in expanded.coeffs.items():
                vec[col[mu]] = c
            rows.append(vec)
        return rows

    det_eh = _det(matrix("e", "h"))
    det_he = _det(matrix("h", "e"))
    return {
        "n": n,
        "det_e_in_h": det_eh,
        "det_h_in_e": det_he,
        "unimodular": abs(det_eh) == 1 and abs(det_he) == 1,
    }


def integral_in_basis(f: SymFunc, basis: str) -> bool:
    return f.convert(basis).is_integral()


def power_sum_mod2_congruence(r: int) -> bool:
    """p_{2^r} == p_1^(2^r) mod 2 in integer h coordinates."""
    n = 2**r
    lhs = p_(n).convert("h")
    rhs = SymFunc.monomial("h", [1] * n)
    if not lhs.is_integral():
        raise IntegralityViolation("power sum has non-integer h expansion")
    diff = lhs - rhs
    return all(c.numerator % 2 == 0 for c in diff.coeffs.values())
