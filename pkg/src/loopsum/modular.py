"""Modular arithmetic helpers for fast exact kernel solves.

Large eigenvector extractions run over F_p for primes p = 1 (mod 3), where
w maps to a cube root of unity g; the pair (a, b) of a value a + b*w is
recovered from the two embeddings w -> g and w -> g^2, combined by CRT
across primes, and lifted by rational reconstruction.  Callers must verify
the lifted result exactly; these routines only propose candidates.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_one_mod_three(count: int, start: int = (1 << 59) + 1):
    """The first `count` primes p >= start with p = 1 (mod 3)."""
    out = []
    p = start + (1 - start) % 3
    if p % 2 == 0:
        p += 3
    while len(out) < count:
        if is_prime(p):
            out.append(p)
        p += 6 if p % 6 == 1 else 3
        p += (1 - p) % 3
    return out


_CACHED_PRIMES: dict[int, list[tuple[int, int]]] = {}


def cached_primes(count: int, start: int) -> list[tuple[int, int]]:
    """The first `count` primes p = 1 (mod 3) from `start`, with a cube
    root of unity for each; memoized so repeated solves skip the sieve."""
    lst = _CACHED_PRIMES.setdefault(start, [])
    p = lst[-1][0] + 1 if lst else start
    while len(lst) < count:
        (p,) = primes_one_mod_three(1, p)
        lst.append((p, cube_root_mod(p)))
        p += 1
    return lst[:count]


def cube_root_mod(p: int) -> int:
    """A primitive cube root of unity g mod p (p = 1 mod 3)."""
    for a in range(2, 1000):
        g = pow(a, (p - 1) // 3, p)
        if g != 1:
            if (g * g + g + 1) % p:
                raise ArithmeticError(f"bad cube root mod {p}")
            return g
    raise ArithmeticError(f"no cube root found mod {p}")


def fraction_mod(x: Fraction | int, p: int) -> int:
    if isinstance(x, int):
        return x % p
    den = x.denominator % p
    if den == 0:
        raise ZeroDivisionError(f"denominator divisible by {p}")
    return x.numerator % p * pow(den, p - 2, p) % p


def cyclo_mod(a: Fraction, b: Fraction, p: int, g: int) -> int:
    """a + b*w under the embedding w -> g."""
    return (fraction_mod(a, p) + fraction_mod(b, p) * g) % p


def nullspace_mod(rows: list[list[int]], p: int) -> list[list[int]]:
    """Kernel basis of a matrix over F_p (rows are modified in place)."""
    if not rows:
        return []
    ncols = len(rows[0])
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        rr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[i]
                rows[i] = [(x - f * y) % p for x, y in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for rr, pc in enumerate(pivots):
            v[pc] = -rows[rr][fc] % p
        basis.append(v)
    return basis


def nullspace_mod_np(rows, p: int) -> list[list[int]]:
    """Vectorized kernel basis over F_p for p < 2^30 (int64-safe).

    ``rows`` is an int64 numpy array with entries already reduced mod p;
    it is consumed.  Matches nullspace_mod exactly.
    """
    import numpy as np

    nrows, ncols = rows.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        nz = np.nonzero(rows[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            rows[[r, pr]] = rows[[pr, r]]
        inv = pow(int(rows[r, c]), -1, p)
        rows[r] = rows[r] * inv % p
        f = rows[:, c].copy()
        f[r] = 0
        hits = np.nonzero(f)[0]
        if hits.size:
            rows[hits] = (rows[hits] - np.outer(f[hits], rows[r])) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for rr, pc in enumerate(pivots):
            v[pc] = int(-rows[rr, fc]) % p
        basis.append(v)
    return basis


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine x = r1 (mod m1), x = r2 (mod m2) for coprime moduli."""
    t = (r2 - r1) % m2 * pow(m1 % m2, -1, m2) % m2
    return (r1 + m1 * t) % (m1 * m2), m1 * m2


def rational_reconstruct(r: int, m: int) -> Fraction | None:
    """The unique p/q with p = q*r (mod m), |p| <= B, 0 < q <= B, B^2 <= m/2.

    Returns None when no such fraction exists (more moduli are needed).
    """
    bound = isqrt(m // 2)
    a, b = m, r % m
    pa, pb = 0, 1
    while b > bound:
        quo = a // b
        a, b = b, a - quo * b
        pa, pb = pb, pa - quo * pb
    if pb == 0 or abs(pb) > bound or gcd(b, abs(pb)) != 1 or gcd(abs(pb), m) != 1:
        return None
    return Fraction(b, pb) if pb > 0 else Fraction(-b, -pb)
