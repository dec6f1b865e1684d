import random

from loopsum.cyclo import CycloNum, ONE, Q, Q_INV, ZERO
from loopsum.linkpat import enumerate_patterns, spin_embed
from loopsum.solver import ExactMatrix
from loopsum.tmatrix import (
    check_arch_insertion,
    check_interlacing,
    check_transfer_commutation,
    check_unitarity,
    check_yang_baxter,
    e_link_matrix,
    eigenvalue,
    monodromy_blocks,
    r_matrix_spin,
    rcheck_link,
    rcheck_spin,
    transfer_apply_spin,
    transfer_link,
    transfer_spin,
)

rng = random.Random(123)


def test_r_matrix_equal_parameters():
    r = r_matrix_spin(5, 5)
    off = (Q - Q_INV) * CycloNum(5, 0)
    assert r[1][1] == ZERO and r[2][2] == ZERO
    assert r[1][2] == off and r[2][1] == off
    assert r[0][0] == r[3][3] == (Q - Q_INV) * CycloNum(5, 0)


def test_r_matrix_entry_updown_downup():
    r = r_matrix_spin(7, 3)
    assert r[1][2] == (Q - Q_INV) * CycloNum(3, 0)  # the t entry
    assert r[2][1] == (Q - Q_INV) * CycloNum(7, 0)  # the z entry


def test_spin_unitarity():
    z, w = CycloNum(2, 0), CycloNum(3, 0)
    prod = ExactMatrix(rcheck_spin(z, w)) @ ExactMatrix(rcheck_spin(w, z))
    scalar = (Q * z - Q_INV * w) * (Q * w - Q_INV * z)
    assert prod == ExactMatrix.identity(4).scale(scalar)


def test_rcheck_link_special_points():
    n = 2
    z = CycloNum(5, 0)
    # w = q^2 z kills the identity part
    m = rcheck_link(1, z, Q * Q * z, n)
    e = e_link_matrix(n, 1)
    coeff = z - Q * Q * z
    assert m == ExactMatrix([[coeff * e.data[r][c] for c in range(2)] for r in range(2)])
    # w = z kills the TL part
    m = rcheck_link(1, z, z, n)
    assert m == ExactMatrix.identity(2).scale((Q - Q_INV) * z)


def test_yang_baxter_both_representations():
    for n in (2, 3):
        z1, z2, z3 = rng.sample(range(1, 40), 3)
        assert check_yang_baxter(n, z1, z2, z3).passed


def test_unitarity_all_sites():
    for n in (2, 3, 4):
        z, w = rng.sample(range(1, 40), 2)
        assert check_unitarity(n, z, w).passed


def test_transfer_spin_n1_fixes_embedded_pattern():
    z = [CycloNum(2, 0), CycloNum(3, 0)]
    t = CycloNum(5, 0)
    op = transfer_spin(t, z)
    vec = spin_embed(enumerate_patterns(1)[0])
    out = op.apply(vec)
    lam = eigenvalue(t, z)
    assert out == {k: lam * v for k, v in vec.items()}


def test_transfer_spin_magnetization_conserved():
    z = [CycloNum(x, 0) for x in (2, 3, 5, 7)]
    op = transfer_spin(CycloNum(11, 0), z)
    for (r, c) in op.entries:
        assert bin(r).count("1") == bin(c).count("1")


def test_transfer_spin_streaming_agrees_with_blocks():
    z = [CycloNum(x, 0) for x in (2, 3, 5, 7)]
    t = CycloNum(11, 0)
    op = transfer_spin(t, z)
    vec = spin_embed(enumerate_patterns(2)[0])
    assert transfer_apply_spin(z, t, vec) == op.apply(vec)


def test_transfer_spin_commutation_in_sector():
    zs = [CycloNum(x, 0) for x in rng.sample(range(1, 30), 4)]
    a, idx = transfer_spin(CycloNum(5, 0), zs).sector_matrix(2)
    b, _ = transfer_spin(CycloNum(9, 0), zs).sector_matrix(2)
    assert a @ b == b @ a


def test_transfer_link_n1_value():
    z = [2, 3]
    t = 5
    for route in ("spin", "loop"):
        m = transfer_link(t, z, 1, route=route)
        assert m.data[0][0] == eigenvalue(t, z)


def test_transfer_link_routes_agree():
    for n in (1, 2, 3, 4):
        zs = rng.sample(range(1, 40), 2 * n)
        t = rng.randint(1, 40)
        a = transfer_link(t, zs, n, route="spin")
        b = transfer_link(t, zs, n, route="loop")
        assert a == b, f"routes differ at n={n}"


def test_transfer_link_rowsums_at_homogeneous_point():
    # all parameters 1: the flat vector is the groundstate, eigenvalue
    # (q t - q^{-1})^4 at t = 1
    m = transfer_link(1, [1, 1, 1, 1], 2, route="spin")
    lam = eigenvalue(1, [1, 1, 1, 1])
    for row in m.data:
        assert sum(row, ZERO) == lam


def test_interlacing_all_sites():
    for n in (2, 3):
        zs = rng.sample(range(1, 40), 2 * n)
        t = rng.randint(1, 40)
        for i in range(1, 2 * n + 1):
            assert check_interlacing(n, t, zs, i).passed


def test_arch_insertion_identity():
    for n in (2, 3):
        for i in (1, 2, 2 * n - 1):
            zs_small = rng.sample(range(1, 40), 2 * n - 2)
            assert check_arch_insertion(n, rng.randint(1, 20), zs_small, i,
                                        rng.randint(1, 20)).passed


def test_transfer_commutation_link():
    for n in (2, 3):
        zs = rng.sample(range(1, 40), 2 * n)
        assert check_transfer_commutation(n, zs, 3, 17).passed


def test_arch_weight_cancellation_identity():
    # u_i u_{i+1} + v_i v_{i+1} + u_i v_{i+1} = 0 at z_{i+1} = q^2 z_i
    z = CycloNum(7, 0)
    t = CycloNum(3, 0)
    zi1 = Q * Q * z
    u_i = Q * z - Q_INV * t
    v_i = z - t
    u_j = Q * zi1 - Q_INV * t
    v_j = zi1 - t
    assert u_i * u_j + v_i * v_j + u_i * v_j == ZERO


def test_monodromy_block_structure():
    # A and D preserve magnetization; B lowers it by one, C raises it
    zs = [CycloNum(x, 0) for x in (2, 3)]
    A, B, C, D = monodromy_blocks(CycloNum(5, 0), zs)
    for (r, c) in A:
        assert bin(r).count("1") == bin(c).count("1")
    for (r, c) in B:
        assert bin(r).count("1") == bin(c).count("1") + 1
    for (r, c) in C:
        assert bin(r).count("1") == bin(c).count("1") - 1
    for (r, c) in D:
        assert bin(r).count("1") == bin(c).count("1")


def test_eigenvalue_factor_form():
    zs = [1, 2]
    lam = eigenvalue(3, zs)
    expect = (Q * CycloNum(3, 0) - Q_INV * ONE) * (
        Q * CycloNum(3, 0) - Q_INV * CycloNum(2, 0)
    )
    assert lam == expect
