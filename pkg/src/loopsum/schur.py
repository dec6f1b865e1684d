"""Exact symmetric functions and the Bethe-ansatz functional equations.

Schur polynomials evaluate through the bialternant determinant ratio when
the arguments are pairwise distinct and through Jacobi-Trudi (a determinant
of complete homogeneous sums) when values repeat; both routes are exact
over Q(w) and agree wherever both apply.

The six-vertex partition function with domain wall boundaries at the cubic
root of unity is the Schur function of the staircase-doubled shape
Y_n = (n-1, n-1, n-2, n-2, ..., 1, 1); it obeys the recursion

    Z_n |_{z_{i+1} = q^2 z_i} = prod_{j != i, i+1} (q z_i - z_j) * Z_{n-1}

which, with symmetry and the degree bounds, pins it completely.

The companion objects live in one auxiliary variable t: the degree-3n
polynomial F_n(t) whose roots are q z_i together with the Bethe roots,
its cube-root-of-unity identity F(t) + q^2 F(q t) + q F(q^2 t) = 0
(equivalently a_{3k+1} = 0), the quotient Q_n(t), and the T-Q relation
with eigenvalue prod_i (q t - q^{-1} z_i).  One deliberately quarantined
floating-point routine cross-checks the algebraic-Bethe-ansatz vector
numerically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cyclo import CycloNum, ONE, Q, Q_INV, ZERO
from .mpoly import MPoly, interpolate_grid
from .report import CheckReport
from .solver import ExactMatrix, det


class DegenerateDenominatorError(ValueError):
    """A Schur-function denominator vanished; resample the point."""


class NonzeroRemainderError(ArithmeticError):
    """An exact polynomial division left a remainder (internal error)."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        p = tuple(int(x) for x in parts)
        while p and p[-1] == 0:
            p = p[:-1]
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"{p} is not weakly decreasing")
        if any(x < 0 for x in p):
            raise ValueError("negative part")
        object.__setattr__(self, "parts", p)

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)


def y_partition(n: int) -> Partition:
    """Two rows each of length n-1, n-2, ..., 1."""
    parts = []
    for k in range(n - 1, 0, -1):
        parts += [k, k]
    return Partition(parts)


def y_tilde_partition(n: int) -> Partition:
    """y_partition(n) with one extra row of length n on top."""
    return Partition((n,) + y_partition(n).parts)


def _as_cyclo(x) -> CycloNum:
    if isinstance(x, CycloNum):
        return x
    return CycloNum(x, 0)


def _h_values(xs: list[CycloNum], kmax: int) -> list[CycloNum]:
    """Complete homogeneous sums h_0..h_kmax of xs, by the one-variable
    extension recurrence."""
    h = [ONE] + [ZERO] * kmax
    for x in xs:
        for k in range(1, kmax + 1):
            h[k] = h[k] + x * h[k - 1]
    return h


def schur_eval(shape: Partition, xs: Sequence) -> CycloNum:
    """Exact Schur polynomial value s_shape(xs)."""
    x = [_as_cyclo(v) for v in xs]
    nvars = len(x)
    if shape.length() > nvars:
        return ZERO
    if not shape.parts:
        return ONE
    if len({(v.a, v.b) for v in x}) == nvars:
        return _schur_bialternant(shape, x)
    return _schur_jacobi_trudi(shape, x)


def _schur_bialternant(shape: Partition, x: list[CycloNum]) -> CycloNum:
    n = len(x)
    lam = list(shape.parts) + [0] * (n - shape.length())
    powers = [lam[j] + n - 1 - j for j in range(n)]
    num = det(ExactMatrix([[xi**e for e in powers] for xi in x]))
    den = ONE
    for i in range(n):
        for j in range(i + 1, n):
            den = den * (x[i] - x[j])
    return num / den


def _schur_jacobi_trudi(shape: Partition, x: list[CycloNum]) -> CycloNum:
    r = shape.length()
    kmax = shape.parts[0] + r
    h = _h_values(x, kmax)

    def entry(i, j):
        k = shape.parts[i] - (i + 1) + (j + 1)
        if k < 0:
            return ZERO
        return h[k]

    return det(ExactMatrix([[entry(i, j) for j in range(r)] for i in range(r)]))


def z_partition_function(n: int, zs: Sequence) -> CycloNum:
    """The domain-wall partition function s_{Y_n}(z_1..z_2n)."""
    if len(zs) != 2 * n:
        raise ValueError(f"expected {2 * n} arguments")
    return schur_eval(y_partition(n), zs)


def _z_value_task(args):
    n, pts = args
    return pts, z_partition_function(n, list(pts) + [Fraction(1)])


@lru_cache(maxsize=None)
def schur_symbolic(n: int, threads: int | None = None) -> MPoly:
    """s_{Y_n} as an exact polynomial in 2n variables.

    Reconstructed by tensor-grid interpolation from point evaluations: the
    shape has per-variable degree n-1, so n nodes per variable suffice,
    with one variable pinned by homogeneity.
    """
    import os
    from concurrent.futures import ProcessPoolExecutor

    m = 2 * n
    if n == 1:
        return MPoly.constant(2, 1)
    nodes = [[Fraction(k) for k in range(1, n + 1)] for _ in range(m - 1)]
    points = list(itertools.product(*nodes))
    workers = threads if threads is not None else (os.cpu_count() or 1)
    values = {}
    if workers > 1 and len(points) >= 2048:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for pts, val in pool.map(
                _z_value_task, [(n, p) for p in points], chunksize=128
            ):
                values[pts] = val
    else:
        for pts in points:
            values[pts] = z_partition_function(n, list(pts) + [Fraction(1)])
    dehom = interpolate_grid(values, [n - 1] * (m - 1), nodes)
    return dehom.homogenize(m - 1, n * (n - 1))


def check_z_recursion(n: int, i: int, zs_rest: Sequence) -> CheckReport:
    """Z_n at z_{i+1} = q^2 z_i against prod_{j != i,i+1} (q z_i - z_j) Z_{n-1}.

    ``zs_rest`` supplies the 2n-1 free values (z_{i+1} is derived).
    """
    if not 1 <= i <= 2 * n - 1:
        raise ValueError("need 1 <= i <= 2n-1")
    rest = [_as_cyclo(x) for x in zs_rest]
    if len(rest) != 2 * n - 1:
        raise ValueError(f"expected {2 * n - 1} free values")
    zi = rest[i - 1]
    zs = rest[: i] + [Q * Q * zi] + rest[i:]
    lhs = z_partition_function(n, zs)
    prefactor = ONE
    for j, zj in enumerate(zs, start=1):
        if j not in (i, i + 1):
            prefactor = prefactor * (Q * zi - zj)
    small = [zj for j, zj in enumerate(zs, start=1) if j not in (i, i + 1)]
    rhs = prefactor * z_partition_function(n - 1, small)
    report = CheckReport(f"z-recursion(n={n}, i={i})")
    report.add(lhs == rhs, point=[str(z) for z in zs])
    return report


# ---------------------------------------------------------------------------
# univariate helpers (coefficients ascending in t)
# ---------------------------------------------------------------------------


def poly_eval(coeffs: list[CycloNum], t: CycloNum) -> CycloNum:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def poly_mul(a: list[CycloNum], b: list[CycloNum]) -> list[CycloNum]:
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def poly_divmod(num: list[CycloNum], den: list[CycloNum]):
    num = list(num)
    dn = len(den) - 1
    while den and not den[-1]:
        den = den[:-1]
        dn -= 1
    lead_inv = den[-1].inverse()
    quot = [ZERO] * max(len(num) - dn, 0)
    for k in range(len(num) - dn - 1, -1, -1):
        c = num[k + dn] * lead_inv
        if c:
            quot[k] = c
            for j, d in enumerate(den):
                num[k + j] = num[k + j] - c * d
    while num and not num[-1]:
        num.pop()
    return quot, num


def f_poly(n: int, zs: Sequence) -> list[CycloNum]:
    """The monic degree-3n polynomial in t with roots q z_i and the Bethe
    roots, from the determinant ratio over the powers not equal to
    1 mod 3.

    Coefficients ascend; entry 3k+1 vanishes for k < n.
    """
    if len(zs) != 2 * n:
        raise ValueError(f"expected {2 * n} arguments")
    w = [Q * _as_cyclo(z) for z in zs]
    exps_num = [e for e in range(3 * n + 1) if e % 3 != 1]
    exps_den = [e for e in range(3 * n) if e % 3 != 1]
    den = det(ExactMatrix([[wi**e for e in exps_den] for wi in w]))
    if not den:
        raise DegenerateDenominatorError("denominator determinant vanished")
    # expand the (2n+1)-column determinant along the t column
    coeffs = [ZERO] * (3 * n + 1)
    rows = len(exps_num)
    for r in range(rows):
        kept = [e for k, e in enumerate(exps_num) if k != r]
        minor = det(ExactMatrix([[wi**e for e in kept] for wi in w]))
        sign = ONE if (r + rows - 1) % 2 == 0 else -ONE
        coeffs[exps_num[r]] = sign * minor / den
    if coeffs[-1] != ONE:
        raise NonzeroRemainderError("leading coefficient is not 1")
    return coeffs


def q_poly(n: int, zs: Sequence) -> list[CycloNum]:
    """The Bethe-root polynomial: f_poly divided by prod_i (t - q z_i)."""
    f = f_poly(n, zs)
    den = [ONE]
    for z in zs:
        den = poly_mul(den, [-(Q * _as_cyclo(z)), ONE])
    quot, rem = poly_divmod(f, den)
    if rem:
        raise NonzeroRemainderError("root-product division left a remainder")
    return quot


def _scale_argument(coeffs: list[CycloNum], s: CycloNum) -> list[CycloNum]:
    """Coefficients of P(s * t)."""
    out = []
    power = ONE
    for c in coeffs:
        out.append(c * power)
        power = power * s
    return out


def check_f_identity(n: int, zs: Sequence) -> CheckReport:
    """F(t) + q^2 F(q t) + q F(q^2 t) = 0 and the equivalent coefficient
    statement a_{3k+1} = 0."""
    report = CheckReport(f"f-identity(n={n})")
    f = f_poly(n, zs)
    combo = [
        c0 + Q * Q * c1 + Q * c2
        for c0, c1, c2 in zip(f, _scale_argument(f, Q), _scale_argument(f, Q * Q))
    ]
    report.add(all(not c for c in combo), kind="functional-identity")
    report.add(
        all(not f[3 * k + 1] for k in range(n)), kind="coefficient-condition"
    )
    for z in zs:
        report.add(not poly_eval(f, Q * _as_cyclo(z)), kind="root", z=str(z))
    return report


def check_tq(n: int, zs: Sequence) -> CheckReport:
    """The T-Q relation with eigenvalue prod_i (q t - q^{-1} z_i):

    T(t) Q(t) = -q prod_i (q^{-1} t - q z_i) q^{2n} Q(q^2 t)
                - q^{-1} prod_i (t - z_i) q^n Q(q t)

    where the two shifted products of Bethe-root factors have been
    rewritten through Q itself.
    """
    report = CheckReport(f"t-q(n={n})")
    qq = q_poly(n, zs)
    report.add(len(qq) - 1 == n, kind="degree", degree=len(qq) - 1)

    tpoly = [ONE]
    p1 = [ONE]
    p2 = [ONE]
    for z in zs:
        z = _as_cyclo(z)
        tpoly = poly_mul(tpoly, [-(Q_INV * z), Q])
        p1 = poly_mul(p1, [-(Q * z), Q_INV])
        p2 = poly_mul(p2, [-z, ONE])
    lhs = poly_mul(tpoly, qq)
    q2n = Q ** (2 * n)
    qn = Q**n
    rhs_a = [(-Q) * q2n * c for c in poly_mul(p1, _scale_argument(qq, Q * Q))]
    rhs_b = [(-Q_INV) * qn * c for c in poly_mul(p2, _scale_argument(qq, Q))]
    width = max(len(lhs), len(rhs_a), len(rhs_b))

    def pad(v):
        return v + [ZERO] * (width - len(v))

    lhs, rhs_a, rhs_b = pad(lhs), pad(rhs_a), pad(rhs_b)
    ok = all(l == a + b for l, a, b in zip(lhs, rhs_a, rhs_b))
    report.add(ok, kind="functional-equation")

    # the quotient also equals a ratio of Schur functions
    w = [Q * _as_cyclo(z) for z in zs]
    denom = schur_eval(y_tilde_partition(n), w)
    if denom:
        ratio = _schur_with_extra_variable(y_partition(n + 1), w)
        scaled = [c * denom for c in qq]
        width = max(len(ratio), len(scaled))
        ok = pad_list(ratio, width) == pad_list(scaled, width)
        report.add(ok, kind="schur-ratio")
    return report


def pad_list(v: list[CycloNum], width: int) -> list[CycloNum]:
    return v + [ZERO] * (width - len(v))


def _schur_with_extra_variable(shape: Partition, w: list[CycloNum]) -> list[CycloNum]:
    """s_shape(w_1..w_m, t) as coefficients in t (w pairwise distinct)."""
    m = len(w) + 1
    lam = list(shape.parts) + [0] * (m - shape.length())
    powers = [lam[j] + m - 1 - j for j in range(m)]
    vdm = ONE
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            vdm = vdm * (w[i] - w[j])
    if not vdm:
        raise DegenerateDenominatorError("repeated arguments")
    # numerator: expand along the last row (the t powers)
    num = [ZERO] * (max(powers) + 1)
    for k, e in enumerate(powers):
        kept = [ee for j, ee in enumerate(powers) if j != k]
        minor = det(ExactMatrix([[wi**ee for ee in kept] for wi in w]))
        sign = ONE if (m - 1 + k) % 2 == 0 else -ONE
        num[e] = sign * minor
    # divide by prod_i (w_i - t) and by the Vandermonde of w
    den = [ONE]
    for wi in w:
        den = poly_mul(den, [wi, -ONE])
    quot, rem = poly_divmod(num, den)
    if rem:
        raise NonzeroRemainderError("Schur ratio division left a remainder")
    return [c / vdm for c in quot]


# ---------------------------------------------------------------------------
# quarantined floating-point check of the algebraic Bethe ansatz
# ---------------------------------------------------------------------------


def aba_residual(n: int, zs: Sequence) -> dict:
    """Numerically build prod_i B(t_i) |up...up> from the Bethe roots and
    report floating residuals: the eigenvector equation, the eigenvalue
    against prod_i (q t - q^{-1} z_i), and the angle to the embedded
    link-pattern subspace.

    This is the only floating-point computation in the package.
    """
    import numpy as np

    from .linkpat import enumerate_patterns, spin_embed

    if n > 3:
        raise ValueError("numeric check capped at n = 3")
    m = 2 * n
    q = complex(-0.5, 0.75**0.5)
    z = [complex(Fraction(x)) if not isinstance(x, CycloNum) else complex(x) for x in zs]

    roots = np.roots([complex(c) for c in reversed(q_poly(n, zs))])

    def blocks(t):
        A = np.zeros((1, 1), dtype=complex)
        A[0, 0] = 1.0
        B = np.zeros((1, 1), dtype=complex)
        C = np.zeros((1, 1), dtype=complex)
        D = np.eye(1, dtype=complex)
        for k in range(1, m + 1):
            zk = z[k - 1]
            u, v = q * zk - t / q, zk - t
            bz, bt = (q - 1 / q) * zk, (q - 1 / q) * t
            # 2x2 locals acting on the new site (bit k-1)
            la = np.array([[u, 0], [0, v]])
            lb = np.array([[0, 0], [bz, 0]])
            lc = np.array([[0, bt], [0, 0]])
            ld = np.array([[v, 0], [0, u]])
            nA = np.kron(la, A) + np.kron(lb, C)
            nB = np.kron(la, B) + np.kron(lb, D)
            nC = np.kron(lc, A) + np.kron(ld, C)
            nD = np.kron(lc, B) + np.kron(ld, D)
            A, B, C, D = nA, nB, nC, nD
        return A, B, C, D

    state = np.zeros(1 << m, dtype=complex)
    state[0] = 1.0
    for t in roots:
        _, B, _, _ = blocks(t)
        state = B @ state

    t_test = 1.31  # generic evaluation parameter for the residual
    A, _, _, D = blocks(t_test)
    tv = (-q) * (A @ state) + (-1 / q) * (D @ state)
    lam = np.prod([q * t_test - zk / q for zk in z])
    res = np.linalg.norm(tv - lam * state) / max(np.linalg.norm(tv), 1e-300)
    rayleigh = np.vdot(state, tv) / np.vdot(state, state)
    eig_err = abs(rayleigh - lam) / abs(lam)

    emb = []
    for p in enumerate_patterns(n):
        col = np.zeros(1 << m, dtype=complex)
        for bits, c in spin_embed(p).items():
            col[bits] = complex(c)
        emb.append(col)
    E = np.stack(emb, axis=1)
    coeffs, *_ = np.linalg.lstsq(E, state, rcond=None)
    angle = np.linalg.norm(E @ coeffs - state) / np.linalg.norm(state)

    return {
        "n": n,
        "residual": float(res),
        "eigenvalue_error": float(eig_err),
        "subspace_angle": float(angle),
    }
