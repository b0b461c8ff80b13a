"""Big Witt vectors: the ring structure on truncated series 1 + a1 t + ...

Addition is multiplication of power series.  The ghost map sends the
vector with coefficients h_n(x) to the power sums p_n(x); it is additive
for series products and the ring multiplication is *defined* by ghost =
pointwise product, inverted over the rationals.  Products of integer
vectors are asserted integral, which is exactly the classical claim that
the universal product polynomials have integer coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import IntegralityViolation, PrecisionMismatch
from .symfunc import SymFunc, SymFunc2

DEFAULT_PRECISION = 8


class WittVector:
    """A truncated series 1 + a1 t + ... + aN t^N with exact entries."""

    __slots__ = ("precision", "coeffs")

    def __init__(self, coeffs, precision: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if precision is None:
            precision = len(coeffs)
        if len(coeffs) < precision:
            coeffs += [Fraction(0)] * (precision - len(coeffs))
        if len(coeffs) != precision:
            raise ValueError("more coefficients than the precision allows")
        object.__setattr__(self, "precision", precision)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("WittVector is immutable")

    @classmethod
    def zero(cls, precision: int = DEFAULT_PRECISION) -> WittVector:
        """The series 1: additive identity."""
        return cls([0] * precision)

    @classmethod
    def one(cls, precision: int = DEFAULT_PRECISION) -> WittVector:
        """1/(1-t) truncated: the vector with ghost identically 1."""
        return cls([1] * precision)

    @classmethod
    def from_ghost(cls, ghost, precision: int | None = None) -> WittVector:
        ghost = [Fraction(g) for g in ghost]
        if precision is None:
            precision = len(ghost)
        coeffs: list[Fraction] = []
        for n in range(1, precision + 1):
            acc = ghost[n - 1] + sum(ghost[i - 1] * coeffs[n - i - 1] for i in range(1, n))
            coeffs.append(acc / n)
        return cls(coeffs, precision)

    def ghost(self) -> tuple[Fraction, ...]:
        """g_n = p_n of the alphabet with a_i = h_i, via Newton's recursion."""
        a = self.coeffs
        ghost: list[Fraction] = []
        for n in range(1, self.precision + 1):
            g = n * a[n - 1] - sum(ghost[i - 1] * a[n - i - 1] for i in range(1, n))
            ghost.append(g)
        return tuple(ghost)

    def _match(self, other: WittVector):
        if self.precision != other.precision:
            raise PrecisionMismatch(
                f"precision {self.precision} != {other.precision}"
            )

    def __add__(self, other: WittVector) -> WittVector:
        self._match(other)
        a = (Fraction(1),) + self.coeffs
        b = (Fraction(1),) + other.coeffs
        out = []
        for n in range(1, self.precision + 1):
            out.append(sum(a[i] * b[n - i] for i in range(n + 1)))
        return WittVector(out, self.precision)

    def __neg__(self) -> WittVector:
        out: list[Fraction] = []
        for n in range(1, self.precision + 1):
            out.append(-self.coeffs[n - 1] - sum(self.coeffs[i - 1] * out[n - i - 1] for i in range(1, n)))
        return WittVector(out, self.precision)

    def __sub__(self, other: WittVector) -> WittVector:
        return self + (-other)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __mul__(self, other: WittVector) -> WittVector:
        self._match(other)
        ga = self.ghost()
        gb = other.ghost()
        product = WittVector.from_ghost([x * y for x, y in zip(ga, gb)], self.precision)
        if self.is_integral() and other.is_integral() and not product.is_integral():
            raise IntegralityViolation("integer Witt vectors multiplied to a non-integer")
        return product

    def __eq__(self, other):
        return (
            isinstance(other, WittVector)
            and self.precision == other.precision
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.precision, self.coeffs))

    def __repr__(self):
        terms = ["1"] + [f"({c})t^{n}" for n, c in enumerate(self.coeffs, start=1) if c]
        return " + ".join(terms)

    def to_json(self):
        return {
            "precision": self.precision,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data) -> WittVector:
        return cls([Fraction(n, d) for n, d in data["coeffs"]], data["precision"])


def witt_add(a: WittVector, b: WittVector) -> WittVector:
    return a + b


def witt_mul(a: WittVector, b: WittVector) -> WittVector:
    return a * b


def eps_ghost(coeffs) -> list:
    """Power sums of the alphabet with a_i = e_i (the prod(1 + x_i t) reading).

    Integer inputs stay integers: the Newton expressions are integral.
    """
    a = list(coeffs)
    ghost: list = []
    for n in range(1, len(a) + 1):
        acc = n * a[n - 1]
        for i in range(1, n):
            acc -= (-1) ** (i - 1) * ghost[i - 1] * a[n - i - 1]
        ghost.append((-1) ** (n - 1) * acc)
    return ghost


def eps_from_ghost(ghost) -> list[Fraction]:
    coeffs: list[Fraction] = []
    for n in range(1, len(ghost) + 1):
        acc = (-1) ** (n - 1) * ghost[n - 1]
        for i in range(1, n):
            acc += (-1) ** (i - 1) * ghost[i - 1] * coeffs[n - i - 1]
        coeffs.append(Fraction(acc, n) if not isinstance(acc, Fraction) else acc / n)
    return coeffs


def eps_product(a, b) -> list[Fraction]:
    """Coefficient vector of prod_{i,j}(1 + X_i Y_j u) given e(X) = a, e(Y) = b.

    Evaluates the universal product polynomials P_n numerically: power
    sums multiply pointwise over the product alphabet {X_i Y_j}.
    """
    ga = eps_ghost(a)
    gb = eps_ghost(b)
    return eps_from_ghost([x * y for x, y in zip(ga, gb)])


from functools import lru_cache


@lru_cache(maxsize=None)
def delta_m(n: int) -> SymFunc2:
    """The multiplicative diagonal on the degree-n elementary generator.

    Computed by the primitive route p_k -> p_k (x) p_k and converted to
    e (x) e coordinates; integrality of the result is asserted (it is the
    integrality of the universal product polynomial P_n).
    """
    expansion = SymFunc.generator("e", n).convert("p")
    tensor = SymFunc2("p", {(pi, pi): c for pi, c in expansion.coeffs.items()})
    out = tensor.convert("e")
    if not out.is_integral():
        raise IntegralityViolation(f"delta_m({n}) has non-integer coefficients")
    return out


def delta_m_value(coeffs_a, coeffs_b, n: int) -> Fraction:
    """Evaluate delta_m(n) as a bilinear-monomial polynomial at e-coordinates."""
    total = Fraction(0)
    for (mu, nu), c in delta_m(n).coeffs.items():
        prod = c
        for part in mu.parts:
            prod *= coeffs_a[part - 1]
        for part in nu.parts:
            prod *= coeffs_b[part - 1]
        total += prod
    return total


def delta_m_dual_route_agrees(n: int) -> bool:
    """Check delta_m(k), k <= n, against the product-polynomial route on a grid.

    The k-th product coefficient has degree at most floor(k/i) <= floor(n/i)
    in each variable a_i (its weighted degree in the a's is exactly k), so
    evaluating both routes on the integer grid 0..floor(n/i) per variable,
    in each tensor slot, proves the polynomial identities exactly.
    """
    import itertools

    tables = []
    for k in range(1, n + 1):
        tables.append(
            [
                (tuple(mu.parts), tuple(nu.parts), int(c))
                for (mu, nu), c in delta_m(k).coeffs.items()
            ]
        )
    grid = list(itertools.product(*[range(n // i + 1) for i in range(1, n + 1)]))
    ghosts = [eps_ghost(a) for a in grid]

    def monomial_values(avals):
        values = {(): 1}
        for table in tables:
            for mu, nu, _ in table:
                for key in (mu, nu):
                    if key not in values:
                        prod = 1
                        for part in key:
                            prod *= avals[part - 1]
                        values[key] = prod
        return values

    monos = [monomial_values(a) for a in grid]
    for i in range(len(grid)):
        ga, ma = ghosts[i], monos[i]
        for j in range(len(grid)):
            gb, mb = ghosts[j], monos[j]
            direct = eps_from_ghost([x * y for x, y in zip(ga, gb)])
            for k in range(1, n + 1):
                symbolic = sum(c * ma[mu] * mb[nu] for mu, nu, c in tables[k - 1])
                if direct[k - 1] != symbolic:
                    return False
    return True
