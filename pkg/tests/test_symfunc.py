import random
from fractions import Fraction

from betaring.bring import BElement, beta_regular, beta_upper, diagonal, product, star_basis
from betaring.perms import Partition, PermGroup, partitions
from betaring.symfunc import (
    SymFunc,
    SymFunc2,
    coproduct,
    cycle_index,
    cycle_index_pair,
    e_,
    generator_check,
    h_,
    lin,
    lin2,
    p_,
    plethysm,
    power_sum_mod2_congruence,
)


def test_degree_one_generators_coincide():
    assert h_(1) == p_(1) == e_(1)


def test_newton_examples():
    assert p_(2).convert("h") == SymFunc("h", {(2,): 2, (1, 1): -1})
    assert h_(2).convert("p") == SymFunc("p", {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    assert p_(2).convert("e") == SymFunc("e", {(1, 1): 1, (2,): -2})


def test_roundtrips_through_degree_eight():
    for n in range(1, 9):
        for pi in partitions(n):
            f = SymFunc.monomial("h", pi)
            assert f.convert("p").convert("e").convert("h") == f
            g = SymFunc.monomial("e", pi)
            assert g.convert("p").convert("h").convert("e") == g


def test_multiplication_merges_partitions():
    assert h_(1) * h_(1) == SymFunc.monomial("h", (1, 1))
    f = SymFunc.monomial("p", (2, 1))
    g = SymFunc.monomial("p", (3,))
    assert f * g == SymFunc.monomial("p", (3, 2, 1))


def test_coproduct_examples():
    expected = (
        SymFunc2.tensor(h_(2), SymFunc.one())
        + SymFunc2.tensor(h_(1), h_(1))
        + SymFunc2.tensor(SymFunc.one(), h_(2))
    )
    assert coproduct(h_(2)) == expected
    primitive = SymFunc2.tensor(p_(3), SymFunc.one()) + SymFunc2.tensor(SymFunc.one(), p_(3))
    assert coproduct(p_(3)) == primitive


def test_coproduct_multiplicities():
    # p_(1,1) needs the binomial weight on the middle term
    f = SymFunc.monomial("p", (1, 1))
    result = coproduct(f)
    middle = result.coeffs[(Partition([1]), Partition([1]))]
    assert middle == 2


def test_plethysm_power_sum_laws():
    assert plethysm(p_(2), p_(3)) == p_(6)
    for f in (e_(3), h_(4), p_(2) * p_(1)):
        assert plethysm(f, p_(1)) == f
    g = h_(2)
    lhs = plethysm(p_(2) * p_(3), g)
    rhs = plethysm(p_(2), g) * plethysm(p_(3), g)
    assert lhs == rhs
    assert plethysm(p_(2) + p_(3), g) == plethysm(p_(2), g) + plethysm(p_(3), g)


def test_plethysm_h2_h2():
    target = SymFunc(
        "p",
        {
            (1, 1, 1, 1): Fraction(1, 8),
            (2, 1, 1): Fraction(1, 4),
            (2, 2): Fraction(3, 8),
            (4,): Fraction(1, 4),
        },
    )
    assert plethysm(h_(2), h_(2)) == target


def test_plethysm_associativity_grid():
    samples = [p_(1), p_(2), h_(2), e_(2)]
    for f in samples:
        for g in samples:
            for h in samples:
                degree = (
                    max(f.degrees() or {0})
                    * max(g.degrees() or {0})
                    * max(h.degrees() or {0})
                )
                if degree > 8:
                    continue
                assert plethysm(plethysm(f, g), h) == plethysm(f, plethysm(g, h))


def test_cycle_index_values():
    s2 = PermGroup.symmetric(2)
    assert cycle_index(s2) == h_(2)
    assert cycle_index(PermGroup.trivial(2)) == SymFunc.monomial("p", (1, 1))


def test_lin_examples():
    assert lin(BElement.basis(2, "S2")) == h_(2)
    assert lin(beta_regular(2)) == SymFunc.monomial("p", (1, 1))
    d4 = lin(star_basis((2, "S2"), (2, "S2")))
    assert d4 == plethysm(h_(2), h_(2))
    assert lin(beta_upper(3)) == h_(3)
    assert lin(BElement.one()) == SymFunc.one()


def test_lin_is_a_ring_homomorphism():
    keys = [(1, 0), (2, 0), (2, 1), (3, 1)]
    for ka in keys:
        for kb in keys:
            a, b = BElement.basis(*ka), BElement.basis(*kb)
            assert lin(product(a, b)) == lin(a) * lin(b)
    a = BElement.basis(2, "S2") - beta_upper(1).scale(3)
    b = beta_regular(2)
    assert lin(a + b) == lin(a) + lin(b)


def test_lin_intertwines_diagonals():
    for key in [(2, 0), (2, 1), (3, 1), (3, 3), (4, 2)]:
        a = BElement.basis(*key)
        assert lin2(diagonal(a)) == coproduct(lin(a))


def test_lin_effective_elements_are_integral_in_h():
    rng = random.Random(9)
    keys = [(1, 0), (2, 0), (2, 1), (3, 0), (3, 2), (4, 5)]
    for _ in range(10):
        terms = {k: rng.randint(0, 3) for k in rng.sample(keys, 3)}
        image = lin(BElement(terms)).convert("h")
        assert image.is_integral()


def test_cycle_index_pair_split():
    from betaring.catalog import Ambient, get_catalog

    cat = get_catalog(Ambient.pair(2, 1))
    full = cat.classes[-1]
    z = cycle_index_pair(full.rep, 2, 1)
    assert z == SymFunc2.tensor(h_(2), h_(1))


def test_generator_check_unimodular():
    for n in range(1, 7):
        assert generator_check(n)["unimodular"]


def test_rational_spanning_by_power_sums():
    # h <-> p transition is invertible over Q in each degree
    from betaring.symfunc import _det

    for n in range(1, 7):
        pis = sorted(partitions(n), key=lambda pi: pi.parts)
        col = {pi: i for i, pi in enumerate(pis)}
        rows = []
        for pi in pis:
            vec = [Fraction(0)] * len(pis)
            for mu, c in SymFunc.monomial("h", pi).convert("p").coeffs.items():
                vec[col[mu]] = c
            rows.append(vec)
        assert _det(rows) != 0


def test_mod2_congruence():
    for r in (1, 2, 3):
        assert power_sum_mod2_congruence(r)


def test_json_roundtrip():
    f = h_(2) * h_(1) - p_(3).scale(Fraction(1, 3))
    again = SymFunc.from_json(f.to_json())
    assert again == f and again.basis == f.basis


def test_component_and_coefficient():
    f = h_(2) + h_(1) * h_(1)
    assert f.component(2) == f
    assert f.coefficient((2,)) == 1
    assert f.coefficient((1, 1)) == 1
    assert f.coefficient((3,)) == 0
