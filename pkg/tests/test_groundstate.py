import random
from fractions import Fraction

import pytest

from loopsum.cyclo import CycloNum, Q, Q_INV
from loopsum.golden import golden_groundstate
from loopsum.groundstate import (
    DegenerateKernelError,
    Groundstate,
    base_component,
    base_component_value,
    check_cyclic_reflection,
    check_exchange,
    check_factorization,
    check_monomial_property,
    check_normalization_chain,
    check_recursion_adjacent,
    check_recursion_general,
    check_t_independence,
    psi_point,
    psi_symbolic,
)
from loopsum.linkpat import fully_nested, pattern_index
from loopsum.mpoly import MPoly
from loopsum.schur import schur_symbolic, z_partition_function
from loopsum.tmatrix import eigenvalue, transfer_link

rng = random.Random(17)


def test_base_component_values():
    assert base_component(1) == MPoly.constant(2, 1)
    assert base_component_value(2, [1, 1, 1, 1]) == CycloNum(3, 0)
    assert base_component_value(3, [1] * 6) == CycloNum(27, 0)
    zs = rng.sample(range(1, 30), 4)
    assert base_component(2).eval(zs) == base_component_value(2, zs)


def test_base_component_closed_form_n2():
    z = [MPoly.variable(4, k) for k in range(4)]
    expect = (z[0] * Q - z[1] * Q_INV) * (z[3] * Q_INV - z[2] * Q)
    assert base_component(2) == expect


def test_psi_point_all_ones_n2():
    pv = psi_point(2, [1, 1, 1, 1])
    assert list(pv.values) == [CycloNum(3, 0), CycloNum(3, 0)]


def test_psi_point_all_ones_n3():
    pv = psi_point(3, [1] * 6)
    vals = sorted(int(v.a) for v in pv.values)
    assert vals == [27, 27, 27, 54, 54]
    assert all(v.is_rational() for v in pv.values)


def test_psi_point_matches_golden_at_point():
    zs = [1, 2, 3, 5]
    pv = psi_point(2, zs)
    golden = golden_groundstate(2)
    assert list(pv.values) == golden.values_at(zs)


def test_psi_point_requires_positive_rationals():
    with pytest.raises(ValueError):
        psi_point(2, [1, -2, 3, 5])


def test_psi_point_exact_and_modular_agree():
    for n in (2, 3, 4):
        zs = rng.sample(range(1, 30), 2 * n)
        a = psi_point(n, zs, t=7, method="exact")
        b = psi_point(n, zs, t=7, method="modular")
        assert a.values == b.values


def test_psi_point_fractional_arguments():
    zs = [Fraction(1, 2), Fraction(3, 2), 2, Fraction(7, 3)]
    a = psi_point(2, zs, method="exact")
    b = psi_point(2, zs, method="modular")
    assert a.values == b.values
    assert a.values[pattern_index(2)[fully_nested(2).pairing]] == \
        base_component_value(2, zs)


def test_psi_point_degenerate_t_is_skipped():
    # at the homogeneous point t = 1 degenerates; the schedule moves on
    pv = psi_point(3, [1] * 6)
    assert pv.t == Fraction(2)


def test_psi_point_fixed_degenerate_t_raises():
    with pytest.raises(DegenerateKernelError):
        psi_point(3, [1] * 6, t=1)


def test_psi_point_spin_certificate():
    zs = rng.sample(range(1, 30), 6)
    pv = psi_point(3, zs, spin_certificate=True)
    assert len(pv.values) == 5


def test_symbolic_matches_golden():
    for n in (1, 2, 3):
        g = psi_symbolic(n)
        gold = golden_groundstate(n)
        assert g.patterns == gold.patterns
        for a, b in zip(g.components, gold.components):
            assert a == b


def test_symbolic_degree_bounds():
    for n in (2, 3):
        g = psi_symbolic(n)
        for comp in g.components:
            assert comp.is_homogeneous() == n * (n - 1)
            assert all(comp.degree_in(v) <= n - 1 for v in range(2 * n))
        assert max(
            comp.degree_in(v) for comp in g.components for v in range(2 * n)
        ) == n - 1


def test_sum_components_symmetric_and_schur():
    g = psi_symbolic(2)
    w = g.sum_components()
    for i in range(3):
        assert w.is_symmetric_under_swap(i, i + 1)
    assert w == schur_symbolic(2)
    zs = rng.sample(range(1, 30), 4)
    assert w.eval(zs) == z_partition_function(2, zs)


def test_eigen_residual_off_grid():
    # 20 random off-grid rational points, 2 random t each, exact residual
    for n in (2, 3):
        g = psi_symbolic(n)
        for _ in range(20):
            zs = [
                Fraction(rng.randint(7, 60), rng.randint(1, 5))
                for _ in range(2 * n)
            ]
            vals = g.values_at(zs)
            for _ in range(2):
                t = Fraction(rng.randint(2, 30), rng.randint(1, 3))
                tm = transfer_link(t, zs, n, route="loop")
                lam = eigenvalue(t, zs)
                image = tm.apply(vals)
                assert all(
                    image[k] == lam * vals[k] for k in range(len(vals))
                )


def test_eigen_residual_spin_route_spot():
    g = psi_symbolic(3)
    zs = [Fraction(rng.randint(7, 60), rng.randint(1, 5)) for _ in range(6)]
    t = Fraction(rng.randint(2, 30))
    vals = g.values_at(zs)
    tm = transfer_link(t, zs, 3, route="spin")
    lam = eigenvalue(t, zs)
    image = tm.apply(vals)
    assert all(image[k] == lam * vals[k] for k in range(5))


def test_recursion_adjacent_all_sites():
    g1, g2, g3 = psi_symbolic(1), psi_symbolic(2), psi_symbolic(3)
    for i in range(1, 4):
        assert check_recursion_adjacent(g2, g1, i).passed
    for i in range(1, 6):
        assert check_recursion_adjacent(g3, g2, i).passed


def test_exchange_identity():
    g2, g3 = psi_symbolic(2), psi_symbolic(3)
    for i in range(1, 5):
        assert check_exchange(g2, i).passed
    for i in range(1, 7):
        assert check_exchange(g3, i).passed


def test_factorization_vanishing():
    assert check_factorization(psi_symbolic(2)).passed
    assert check_factorization(psi_symbolic(3)).passed


def test_cyclic_reflection():
    assert check_cyclic_reflection(psi_symbolic(2)).passed
    assert check_cyclic_reflection(psi_symbolic(3)).passed


def test_monomial_property():
    assert check_monomial_property(psi_symbolic(2)).passed
    assert check_monomial_property(psi_symbolic(3)).passed


def test_t_independence():
    assert check_t_independence(2, [1, 2, 3, 5], ts=(7, 11, 13)).passed
    assert check_t_independence(3, [1, 2, 3, 5, 7, 11], ts=(7, 11)).passed


def test_recursion_general():
    g1, g2, g3 = psi_symbolic(1), psi_symbolic(2), psi_symbolic(3)
    assert check_recursion_general(g2, g1, 1, 3).passed
    assert check_recursion_general(g3, g2, 1, 4).passed
    assert check_recursion_general(g3, g2, 2, 5).passed
    # adjacent pair delegates, wrap pair reduces by rotation
    assert check_recursion_general(g2, g1, 1, 2).passed
    assert check_recursion_general(g3, g2, 5, 2).passed


def test_normalization_chain():
    states = [psi_symbolic(k) for k in (1, 2, 3)]
    assert check_normalization_chain(states).passed


def test_groundstate_json_roundtrip():
    g = psi_symbolic(2)
    data = g.to_json()
    back = Groundstate.from_json(data)
    assert back.components == g.components
    assert [p.pairing for p in back.patterns] == [p.pairing for p in g.patterns]
