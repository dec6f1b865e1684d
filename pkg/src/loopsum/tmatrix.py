"""Transfer matrix of the inhomogeneous loop model, in two representations.

The definitional route works in the spin representation: the 4x4 vertex
weight matrix R(z, t), the monodromy matrix as an ordered product
R_{2n,0} ... R_{1,0} over the auxiliary space, and the twisted trace
T = -q A - q^{-1} D.  Link patterns embed into the spin space (each arch
j<k contributing zeta*up_j down_k - zeta^{-1} down_j up_k); T stabilizes
the embedded subspace and its restriction is the loop-model transfer
matrix.

A second, much faster route builds the same matrix directly in the link
basis by summing the 2^{2n} face-tile configurations of one lattice row;
each face carries weight (q z_i - q^{-1} t) for the pass-through tile and
(z_i - t) for the glue tile, closed loops count 1, and the tile geometry
is pinned by exact agreement with the spin route (tested at every n <= 4).

Operators are always built at specific parameter values; nothing here is
symbolic in z or t.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloNum, ONE, Q, Q_INV, ZERO
from .linkpat import (
    e_apply,
    enumerate_patterns,
    pattern_index,
    phi_embed,
    spin_embed,
)
from .solver import ExactMatrix, InconsistentSystemError, solve_many

#: Operators on link patterns are plain exact matrices in canonical order.
LinkOperator = ExactMatrix


class StabilityViolationError(RuntimeError):
    """The spin transfer matrix left the embedded link-pattern subspace.

    This signals an implementation bug, never a data condition.
    """


# ---------------------------------------------------------------------------
# spin representation
# ---------------------------------------------------------------------------


def r_matrix_spin(z, t) -> list[list[CycloNum]]:
    """The 4x4 vertex weight matrix acting on (site) x (auxiliary).

    Basis order: up-up, up-down, down-up, down-down, the site factor first.
    """
    z = _cy(z)
    t = _cy(t)
    a = Q * z - Q_INV * t
    b = z - t
    cz = (Q - Q_INV) * z
    ct = (Q - Q_INV) * t
    zero = ZERO
    return [
        [a, zero, zero, zero],
        [zero, b, ct, zero],
        [zero, cz, b, zero],
        [zero, zero, zero, a],
    ]


def rcheck_spin(z, w) -> list[list[CycloNum]]:
    """R composed with the factor swap: (q z - q^{-1} w) I + (z - w) e."""
    r = r_matrix_spin(z, w)
    # swap the two middle columns (right-multiplication by the permutation)
    return [[row[0], row[2], row[1], row[3]] for row in r]


def _cy(x) -> CycloNum:
    if isinstance(x, CycloNum):
        return x
    return CycloNum(x, 0)


class SpinOperator:
    """A sparse exact operator on (C^2)^{tensor 2n}."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: dict[tuple[int, int], CycloNum]):
        self.dim = dim
        self.entries = {k: v for k, v in entries.items() if v}

    def apply(self, vec: dict[int, CycloNum]) -> dict[int, CycloNum]:
        out: dict[int, CycloNum] = {}
        for (r, c), m in self.entries.items():
            x = vec.get(c)
            if x is None:
                continue
            s = out.get(r)
            s = m * x if s is None else s + m * x
            if s:
                out[r] = s
            else:
                out.pop(r, None)
        return out

    def sector_matrix(self, k_up: int) -> tuple[ExactMatrix, list[int]]:
        """Dense restriction to the sector with k_up up-spins."""
        nbits = self.dim.bit_length() - 1
        idx = [b for b in range(self.dim) if nbits - bin(b).count("1") == k_up]
        pos = {b: i for i, b in enumerate(idx)}
        data = [[ZERO] * len(idx) for _ in idx]
        for (r, c), m in self.entries.items():
            if r in pos and c in pos:
                data[pos[r]][pos[c]] = m
        return ExactMatrix(data), idx


def _tensor_block(local: dict, big: dict, shift: int) -> dict:
    out: dict[tuple[int, int], CycloNum] = {}
    for (sr, sc), lv in local.items():
        hr = sr << shift
        hc = sc << shift
        for (r, c), bv in big.items():
            out[(hr | r, hc | c)] = lv * bv
    return out


def _block_sum(d1: dict, d2: dict) -> dict:
    out = dict(d1)
    for k, v in d2.items():
        s = out.get(k)
        s = v if s is None else s + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def monodromy_blocks(t, zs) -> tuple[dict, dict, dict, dict]:
    """The operator-valued 2x2 monodromy blocks (A, B, C, D)."""
    t = _cy(t)
    A: dict = {(0, 0): ONE}
    B: dict = {}
    C: dict = {}
    D: dict = {(0, 0): ONE}
    for k, z in enumerate(zs, start=1):
        z = _cy(z)
        u = Q * z - Q_INV * t
        v = z - t
        la = {(0, 0): u, (1, 1): v}
        lb = {(1, 0): (Q - Q_INV) * z}
        lc = {(0, 1): (Q - Q_INV) * t}
        ld = {(0, 0): v, (1, 1): u}
        sh = k - 1
        nA = _block_sum(_tensor_block(la, A, sh), _tensor_block(lb, C, sh))
        nB = _block_sum(_tensor_block(la, B, sh), _tensor_block(lb, D, sh))
        nC = _block_sum(_tensor_block(lc, A, sh), _tensor_block(ld, C, sh))
        nD = _block_sum(_tensor_block(lc, B, sh), _tensor_block(ld, D, sh))
        A, B, C, D = nA, nB, nC, nD
    return A, B, C, D


def transfer_spin(t, zs) -> SpinOperator:
    """The twisted-trace transfer matrix -q A(t) - q^{-1} D(t)."""
    A, _, _, D = monodromy_blocks(t, zs)
    entries = _block_sum(
        {k: -(Q * v) for k, v in A.items()},
        {k: -(Q_INV * v) for k, v in D.items()},
    )
    return SpinOperator(1 << len(zs), entries)


def monodromy_apply(zs, t, vec: dict[int, CycloNum], aux: int) -> dict:
    """Apply the monodromy to vec tensor |aux>, streaming site by site.

    Returns a dict keyed (bits, aux_out).  Keeping only aux_out == aux
    yields A.vec (aux=0) or D.vec (aux=1).
    """
    t = _cy(t)
    state: dict[tuple[int, int], CycloNum] = {(bits, aux): c for bits, c in vec.items()}
    for k, z in enumerate(zs, start=1):
        z = _cy(z)
        u = Q * z - Q_INV * t
        v = z - t
        bz = (Q - Q_INV) * z
        bt = (Q - Q_INV) * t
        bit = 1 << (k - 1)
        new: dict[tuple[int, int], CycloNum] = {}

        def put(key, val):
            s = new.get(key)
            s = val if s is None else s + val
            if s:
                new[key] = s
            else:
                new.pop(key, None)

        for (bits, a), c in state.items():
            s = 1 if bits & bit else 0
            if s == a:
                put((bits, a), c * u)
            elif s == 0:  # site up, aux down
                put((bits, 1), c * v)
                put((bits | bit, 0), c * bz)
            else:  # site down, aux up
                put((bits, 0), c * v)
                put((bits & ~bit, 1), c * bt)
        state = new
    return state


def transfer_apply_spin(zs, t, vec: dict[int, CycloNum]) -> dict[int, CycloNum]:
    """T.vec computed without materializing the operator."""
    out: dict[int, CycloNum] = {}
    for aux, twist in ((0, -Q), (1, -Q_INV)):
        for (bits, a), c in monodromy_apply(zs, t, vec, aux).items():
            if a != aux:
                continue
            s = out.get(bits)
            s = twist * c if s is None else s + twist * c
            if s:
                out[bits] = s
            else:
                out.pop(bits, None)
    return out


# ---------------------------------------------------------------------------
# link-pattern representation: local operators
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def e_link_matrix(n: int, i: int) -> ExactMatrix:
    """The Temperley-Lieb generator e_i on link patterns (loop weight 1)."""
    patterns = enumerate_patterns(n)
    index = pattern_index(n)
    c = len(patterns)
    data = [[ZERO] * c for _ in range(c)]
    for src, p in enumerate(patterns):
        q, _closed = e_apply(i, p)
        data[index[q.pairing]][src] = ONE
    return ExactMatrix(data)


def rcheck_link(i: int, z, w, n: int) -> LinkOperator:
    """(q z - q^{-1} w) I + (z - w) e_i on link patterns."""
    z = _cy(z)
    w = _cy(w)
    c1 = Q * z - Q_INV * w
    c2 = z - w
    e = e_link_matrix(n, i)
    cn = e.rows
    data = [[c2 * e.data[r][s] for s in range(cn)] for r in range(cn)]
    for r in range(cn):
        data[r][r] = data[r][r] + c1
    return ExactMatrix(data)


@lru_cache(maxsize=None)
def phi_matrix(n: int, i: int) -> ExactMatrix:
    """The little-arch insertion LP_{n-1} -> LP_n at (i, i+1) as a 0/1 matrix."""
    small = enumerate_patterns(n - 1)
    index = pattern_index(n)
    cn = len(enumerate_patterns(n))
    data = [[ZERO] * len(small) for _ in range(cn)]
    for src, p in enumerate(small):
        data[index[phi_embed(i, p).pairing]][src] = ONE
    return ExactMatrix(data)


# ---------------------------------------------------------------------------
# embedding of link patterns into the spin space
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def embedding_columns(n: int) -> tuple[dict[int, CycloNum], ...]:
    return tuple(spin_embed(p) for p in enumerate_patterns(n))


@lru_cache(maxsize=None)
def sector_rows(n: int) -> tuple[tuple[int, ...], dict[int, int]]:
    """Bitmasks of the n-up sector of 2n sites, with their row positions."""
    masks = [b for b in range(1 << (2 * n)) if bin(b).count("1") == n]
    return tuple(masks), {b: i for i, b in enumerate(masks)}


@lru_cache(maxsize=None)
def embedding_matrix(n: int) -> ExactMatrix:
    """Embedded pattern vectors as columns, rows restricted to the sector."""
    masks, pos = sector_rows(n)
    cols = embedding_columns(n)
    data = [[ZERO] * len(cols) for _ in masks]
    for j, col in enumerate(cols):
        for bits, c in col.items():
            data[pos[bits]][j] = c
    return ExactMatrix(data)


# ---------------------------------------------------------------------------
# link-basis transfer matrix, spin route
# ---------------------------------------------------------------------------


def _transfer_link_spin(t, zs, n: int) -> ExactMatrix:
    masks, pos = sector_rows(n)
    cols = embedding_columns(n)
    y = [[ZERO] * len(cols) for _ in masks]
    for j, col in enumerate(cols):
        image = transfer_apply_spin(zs, t, col)
        for bits, c in image.items():
            if bits not in pos:
                raise StabilityViolationError(
                    f"transfer image leaves the {n}-up sector at mask {bits:b}"
                )
            y[pos[bits]][j] = c
    try:
        return solve_many(embedding_matrix(n), ExactMatrix(y))
    except InconsistentSystemError as exc:
        raise StabilityViolationError(
            "transfer image of an embedded pattern is outside the pattern span"
        ) from exc


# ---------------------------------------------------------------------------
# link-basis transfer matrix, loop (tile) route
# ---------------------------------------------------------------------------
#
# One lattice row is a ring of 2n square faces.  Face i has ports S (old
# point i), N (new point i), W and E (shared with the neighbouring faces,
# E of face 2n glued to W of face 1).  The pass tile connects S-E and W-N,
# the glue tile connects S-W and N-E; with every face passing, the row is
# the one-step rotation, matching the twisted spin trace exactly.

_PORT_S, _PORT_N, _PORT_W, _PORT_E = 0, 1, 2, 3
_PASS = {_PORT_S: _PORT_E, _PORT_E: _PORT_S, _PORT_W: _PORT_N, _PORT_N: _PORT_W}
_GLUE = {_PORT_S: _PORT_W, _PORT_W: _PORT_S, _PORT_N: _PORT_E, _PORT_E: _PORT_N}


def _row_skeleton(n: int, tiles: int) -> list[int]:
    """Endpoint matching of one row configuration.

    Ports 0..2n-1 are the top points N_1..N_2n, ports 2n..4n-1 the bottom
    points S_1..S_2n; skeleton[p] is the port reached from p by travelling
    through the row.  Tile bit i-1 set means face i glues.
    """
    m = 2 * n
    sk = [-1] * (2 * m)
    for start in range(2 * m):
        if sk[start] >= 0:
            continue
        if start < m:
            face, port = start + 1, _PORT_N
        else:
            face, port = start - m + 1, _PORT_S
        while True:
            tile = _GLUE if (tiles >> (face - 1)) & 1 else _PASS
            out = tile[port]
            if out == _PORT_N:
                end = face - 1
                break
            if out == _PORT_S:
                end = m + face - 1
                break
            if out == _PORT_E:
                face = face % m + 1
                port = _PORT_W
            else:
                face = (face - 2) % m + 1
                port = _PORT_E
        sk[start] = end
        sk[end] = start
    return sk


@lru_cache(maxsize=None)
def _tile_table(n: int):
    """table[src][tiles] = canonical index of the resulting pattern,
    stored as compact uint16 arrays (the table dominates memory at n = 7)."""
    from array import array

    patterns = enumerate_patterns(n)
    index = pattern_index(n)
    m = 2 * n
    nconf = 1 << m
    table = [array("H", bytes(2 * nconf)) for _ in patterns]
    for tiles in range(nconf):
        sk = _row_skeleton(n, tiles)
        for src, p in enumerate(patterns):
            pairing = [0] * m
            for i in range(m):
                if pairing[i]:
                    continue
                port = sk[i]
                while port >= m:  # descend through the old pattern
                    port = sk[m + p.partner(port - m + 1) - 1]
                pairing[i] = port + 1
                pairing[port] = i + 1
            table[src][tiles] = index[tuple(pairing)]
    return tuple(table)


def _pmul(x, y):
    a, b = x
    c, d = y
    bd = b * d
    return (a * c - bd, a * d + b * c - bd)


def _to_pair(x):
    if isinstance(x, CycloNum):
        return (x.a, x.b)
    if isinstance(x, (int, Fraction)):
        return (x, 0)
    raise TypeError(f"bad parameter of type {type(x).__name__}")


def row_weights(n: int, zs, t) -> list[tuple]:
    """Weights of all 2^{2n} row configurations as (a, b) pairs."""
    tp = _to_pair(t)
    w = [(1, 0)]
    for z in zs:
        zp = _to_pair(z)
        qz = _pmul((0, 1), zp)
        # u = q z - q^{-1} t, with -q^{-1} t = (t0 - t1) + t0 w ;  v = z - t
        u = (qz[0] + tp[0] - tp[1], qz[1] + tp[0])
        v = (zp[0] - tp[0], zp[1] - tp[1])
        w = [_pmul(x, u) for x in w] + [_pmul(x, v) for x in w]
    return w


def transfer_link_pairs(n: int, zs, t) -> list[list[tuple]]:
    """Link-basis transfer matrix as (a, b) coefficient pairs, tile route."""
    table = _tile_table(n)
    weights = row_weights(n, zs, t)
    cn = len(table)
    ma = [[0] * cn for _ in range(cn)]
    mb = [[0] * cn for _ in range(cn)]
    wa = [w[0] for w in weights]
    wb = [w[1] for w in weights]
    for src in range(cn):
        row = table[src]
        for s, dst in enumerate(row):
            ma[dst][src] += wa[s]
            mb[dst][src] += wb[s]
    return [
        [(ma[r][c], mb[r][c]) for c in range(cn)]
        for r in range(cn)
    ]


def _transfer_link_loop(t, zs, n: int) -> ExactMatrix:
    pairs = transfer_link_pairs(n, zs, t)
    return ExactMatrix(
        [[CycloNum(Fraction(a), Fraction(b)) for a, b in row] for row in pairs]
    )


def transfer_link(t, zs, n: int, route: str = "auto") -> LinkOperator:
    """The transfer matrix restricted to link patterns, canonical order.

    route='spin' decomposes the spin-space action over embedded patterns
    (the defining construction); route='loop' sums row tiles directly in
    the link basis.  Both agree exactly; 'auto' picks spin for n <= 3 and
    the loop route beyond.
    """
    if len(zs) != 2 * n:
        raise ValueError(f"expected {2 * n} spectral parameters, got {len(zs)}")
    if route == "auto":
        route = "spin" if n <= 3 else "loop"
    if route == "spin":
        return _transfer_link_spin(t, zs, n)
    if route == "loop":
        return _transfer_link_loop(t, zs, n)
    raise ValueError(f"unknown route {route!r}")


def eigenvalue(t, zs) -> CycloNum:
    """prod_i (q t - q^{-1} z_i), the groundstate eigenvalue."""
    acc = ONE
    t = _cy(t)
    for z in zs:
        acc = acc * (Q * t - Q_INV * _cy(z))
    return acc


def verify_spin_eigenvector(n: int, zs, t, values) -> bool:
    """Exact check that the embedded vector satisfies (T - Lambda) v = 0.

    This certificate runs entirely in the spin representation and is
    independent of how the candidate values were produced.
    """
    cols = embedding_columns(n)
    vec: dict[int, CycloNum] = {}
    for val, col in zip(values, cols):
        val = _cy(val)
        if not val:
            continue
        for bits, c in col.items():
            s = vec.get(bits)
            s = val * c if s is None else s + val * c
            if s:
                vec[bits] = s
            else:
                vec.pop(bits, None)
    image = transfer_apply_spin(zs, t, vec)
    lam = eigenvalue(t, zs)
    for bits in set(image) | set(vec):
        if image.get(bits, ZERO) != lam * vec.get(bits, ZERO):
            return False
    return True


# ---------------------------------------------------------------------------
# operator identity checks
# ---------------------------------------------------------------------------


def _embed_two_site(op4, i: int, nsites: int) -> ExactMatrix:
    """Lift a two-site operator to sites (i, i+1) of an open chain."""
    dim = 1 << nsites
    data = [[ZERO] * dim for _ in range(dim)]
    lo = 1 << (i - 1)
    hi = 1 << i
    for col in range(dim):
        s1 = 1 if col & lo else 0
        s2 = 1 if col & hi else 0
        rest = col & ~(lo | hi)
        for r1 in (0, 1):
            for r2 in (0, 1):
                m = op4[2 * r1 + r2][2 * s1 + s2]
                if m:
                    row = rest | (lo if r1 else 0) | (hi if r2 else 0)
                    data[row][col] = m
    return ExactMatrix(data)


def check_yang_baxter(n: int, z1, z2, z3) -> "CheckReport":
    """The braid identity R1(z2,z3) R2(z1,z3) R1(z1,z2) =
    R2(z1,z2) R1(z1,z3) R2(z2,z3), in both representations."""
    from .report import CheckReport

    report = CheckReport(f"yang-baxter(n={n})")
    a = rcheck_link(1, z2, z3, n) @ rcheck_link(2, z1, z3, n) @ rcheck_link(1, z1, z2, n)
    b = rcheck_link(2, z1, z2, n) @ rcheck_link(1, z1, z3, n) @ rcheck_link(2, z2, z3, n)
    report.add(a == b, representation="link", point=[str(z) for z in (z1, z2, z3)])
    r1 = lambda x, y: _embed_two_site(rcheck_spin(x, y), 1, 3)
    r2 = lambda x, y: _embed_two_site(rcheck_spin(x, y), 2, 3)
    a = r1(z2, z3) @ r2(z1, z3) @ r1(z1, z2)
    b = r2(z1, z2) @ r1(z1, z3) @ r2(z2, z3)
    report.add(a == b, representation="spin", point=[str(z) for z in (z1, z2, z3)])
    return report


def check_unitarity(n: int, z, w) -> "CheckReport":
    """R_i(z,w) R_i(w,z) = (qz - q^{-1}w)(qw - q^{-1}z) I at every site,
    plus the same 4x4 statement in the spin representation."""
    from .report import CheckReport

    report = CheckReport(f"unitarity(n={n})")
    z = _cy(z)
    w = _cy(w)
    scalar = (Q * z - Q_INV * w) * (Q * w - Q_INV * z)
    target = ExactMatrix.identity(len(enumerate_patterns(n))).scale(scalar)
    for i in range(1, 2 * n + 1):
        got = rcheck_link(i, z, w, n) @ rcheck_link(i, w, z, n)
        report.add(got == target, site=i, representation="link")
    a = rcheck_spin(z, w)
    b = rcheck_spin(w, z)
    prod = ExactMatrix(a) @ ExactMatrix(b)
    report.add(
        prod == ExactMatrix.identity(4).scale(scalar), representation="spin"
    )
    return report


def check_interlacing(n: int, t, zs, i: int) -> "CheckReport":
    """Swapping z_i, z_{i+1} inside the transfer matrix is intertwined by
    R_i(z_i, z_{i+1})."""
    from .report import CheckReport

    report = CheckReport(f"interlacing(n={n}, i={i})")
    m = 2 * n
    j = i % m  # 0-indexed successor position
    swapped = list(zs)
    swapped[i - 1], swapped[j] = swapped[j], swapped[i - 1]
    rc = rcheck_link(i, zs[i - 1], zs[j], n)
    route = "spin" if n <= 3 else "loop"
    lhs = transfer_link(t, zs, n, route=route) @ rc
    rhs = rc @ transfer_link(t, swapped, n, route=route)
    report.add(lhs == rhs, point=[str(z) for z in zs], t=str(t))
    return report


def check_arch_insertion(n: int, t, zs_small, i: int, z_new) -> "CheckReport":
    """Inserting a little arch at (i, i+1) with parameters (z, q^2 z)
    intertwines the transfer matrices of sizes n and n-1 up to the factor
    (q^2 t - z)(t - z)."""
    from .report import CheckReport

    report = CheckReport(f"arch-insertion(n={n}, i={i})")
    z = _cy(z_new)
    t = _cy(t)
    zs = list(zs_small[: i - 1]) + [z, Q * Q * z] + list(zs_small[i - 1 :])
    phi = phi_matrix(n, i)
    lhs = transfer_link(t, zs, n, route="loop") @ phi
    scalar = (Q * Q * t - z) * (t - z)
    rhs = (phi @ transfer_link(t, list(zs_small), n - 1, route="loop")).scale(scalar)
    report.add(lhs == rhs, insert_at=i, z=str(z), t=str(t))
    return report


def check_transfer_commutation(n: int, zs, t1, t2, route: str = "auto") -> "CheckReport":
    """[T(t), T(t')] = 0 on link patterns."""
    from .report import CheckReport

    report = CheckReport(f"transfer-commutation(n={n})")
    a = transfer_link(t1, zs, n, route=route)
    b = transfer_link(t2, zs, n, route=route)
    report.add(a @ b == b @ a, t=[str(t1), str(t2)])
    return report
