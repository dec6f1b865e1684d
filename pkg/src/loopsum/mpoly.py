"""Sparse multivariate polynomials over Q(w), with exact tensor-grid interpolation.

Exponent vectors are tuples of small non-negative ints, one entry per
variable; coefficients are CycloNum and never stored when zero.  Terms are
serialized in graded-lexicographic order so JSON output is canonical.

Interpolation is per-variable Newton divided differences applied recursively
over a tensor grid; with (bound+1) distinct nodes per variable the result is
the unique polynomial within the per-variable degree bounds that matches all
supplied values, and every operation is exact.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .cyclo import CycloNum, ONE, ZERO


class ArityMismatchError(ValueError):
    """A point or exponent vector does not match the variable count."""


class DuplicateNodeError(ValueError):
    """A grid axis contains repeated interpolation nodes."""


class MissingPointError(ValueError):
    """A tensor-grid value is absent from the supplied map."""


def _as_cyclo(x) -> CycloNum:
    if isinstance(x, CycloNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloNum(x, 0)
    raise TypeError(f"cannot use {type(x).__name__} as a coefficient")


class MPoly:
    """A sparse polynomial in ``nvars`` variables over Q(w)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[tuple, CycloNum]] = None):
        clean: dict[tuple[int, ...], CycloNum] = {}
        if terms:
            for exps, coeff in terms.items():
                e = tuple(exps)
                if len(e) != nvars:
                    raise ArityMismatchError(
                        f"exponent vector {e} has length {len(e)}, expected {nvars}"
                    )
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent in {e}")
                c = _as_cyclo(coeff)
                if c:
                    clean[e] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    def __reduce__(self):
        return (MPoly, (self.nvars, self.terms))

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: _as_cyclo(c)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        if not 0 <= index < nvars:
            raise ArityMismatchError(f"variable index {index} out of range")
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): ONE})

    # -- ring operations -----------------------------------------------

    def _check_arity(self, other: "MPoly"):
        if self.nvars != other.nvars:
            raise ArityMismatchError(
                f"variable counts differ: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.nvars, other)
        self._check_arity(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out = MPoly.__new__(MPoly)
        object.__setattr__(out, "nvars", self.nvars)
        object.__setattr__(out, "terms", terms)
        return out

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        out = MPoly.__new__(MPoly)
        object.__setattr__(out, "nvars", self.nvars)
        object.__setattr__(out, "terms", {e: -c for e, c in self.terms.items()})
        return out

    def __sub__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            c = _as_cyclo(other)
            if not c:
                return MPoly.zero(self.nvars)
            return MPoly(self.nvars, {e: k * c for e, k in self.terms.items()})
        self._check_arity(other)
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        acc: dict[tuple[int, ...], CycloNum] = {}
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(map(sum, zip(e1, e2)))
                c = c1 * c2
                s = acc.get(e)
                s = c if s is None else s + c
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        out = MPoly.__new__(MPoly)
        object.__setattr__(out, "nvars", self.nvars)
        object.__setattr__(out, "terms", acc)
        return out

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "MPoly":
        c = _as_cyclo(scalar)
        return self * c.inverse()

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        acc = MPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            if isinstance(other, (int, Fraction, CycloNum)):
                other = MPoly.constant(self.nvars, other)
            else:
                return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ---------------------------------------------------------

    def eval(self, point: Sequence) -> CycloNum:
        """Exact value at a point of CycloNum (or rational) coordinates."""
        if len(point) != self.nvars:
            raise ArityMismatchError(
                f"point has {len(point)} coordinates, expected {self.nvars}"
            )
        pt = [_as_cyclo(x) for x in point]
        # power tables keep repeated exponents cheap
        maxe = [0] * self.nvars
        for e in self.terms:
            for v, k in enumerate(e):
                if k > maxe[v]:
                    maxe[v] = k
        pows: list[list[CycloNum]] = []
        for v in range(self.nvars):
            row = [ONE]
            for _ in range(maxe[v]):
                row.append(row[-1] * pt[v])
            pows.append(row)
        total = ZERO
        for e, c in self.terms.items():
            m = c
            for v, k in enumerate(e):
                if k:
                    m = m * pows[v][k]
            total = total + m
        return total

    def coeff_of(self, exps: Sequence[int]) -> CycloNum:
        e = tuple(exps)
        if len(e) != self.nvars:
            raise ArityMismatchError(
                f"exponent vector has length {len(e)}, expected {self.nvars}"
            )
        return self.terms.get(e, ZERO)

    def total_degree(self) -> int:
        """Max total degree over terms; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=0)

    def is_homogeneous(self) -> Optional[int]:
        """Common total degree of all terms, or None if degrees are mixed."""
        degs = {sum(e) for e in self.terms}
        if not degs:
            return 0
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_symmetric_under_swap(self, i: int, j: int) -> bool:
        """True iff exchanging variables i and j leaves the polynomial fixed."""
        return self == self.swap_args(i, j)

    # -- structural maps --------------------------------------------------

    def permute_args(self, perm: Sequence[int]) -> "MPoly":
        """The polynomial P(z_perm[0], ..., z_perm[nvars-1]).

        ``perm[k]`` names the variable placed in argument slot k, so the
        exponent that sat on slot k moves to variable perm[k].
        """
        if sorted(perm) != list(range(self.nvars)):
            raise ArityMismatchError(f"{perm} is not a permutation of the variables")
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for k, ek in enumerate(e):
                ne[perm[k]] = ek
            terms[tuple(ne)] = c
        return MPoly(self.nvars, terms)

    def swap_args(self, i: int, j: int) -> "MPoly":
        perm = list(range(self.nvars))
        perm[i], perm[j] = perm[j], perm[i]
        return self.permute_args(perm)

    def specialize_ratio(self, var: int, target: int, scale) -> "MPoly":
        """Substitute z_var := scale * z_target (exact; var becomes unused)."""
        if var == target:
            raise ValueError("substitution variable must differ from target")
        s = _as_cyclo(scale)
        terms: dict[tuple[int, ...], CycloNum] = {}
        for e, c in self.terms.items():
            k = e[var]
            ne = list(e)
            ne[var] = 0
            ne[target] += k
            c2 = c * s**k if k else c
            ne = tuple(ne)
            acc = terms.get(ne)
            acc = c2 if acc is None else acc + c2
            if acc:
                terms[ne] = acc
            else:
                terms.pop(ne, None)
        return MPoly(self.nvars, terms)

    def dehomogenize(self, var: int) -> "MPoly":
        """Substitute z_var := 1 and drop the variable."""
        terms: dict[tuple[int, ...], CycloNum] = {}
        for e, c in self.terms.items():
            ne = e[:var] + e[var + 1 :]
            acc = terms.get(ne)
            acc = c if acc is None else acc + c
            if acc:
                terms[ne] = acc
            else:
                terms.pop(ne, None)
        return MPoly(self.nvars - 1, terms)

    def homogenize(self, position: int, total_degree: int) -> "MPoly":
        """Insert a new variable at ``position`` raising every term to
        ``total_degree``.  Fails if some term already exceeds the degree."""
        terms = {}
        for e, c in self.terms.items():
            d = total_degree - sum(e)
            if d < 0:
                raise ValueError(
                    f"term of degree {sum(e)} exceeds target degree {total_degree}"
                )
            ne = e[:position] + (d,) + e[position:]
            terms[ne] = c
        return MPoly(self.nvars + 1, terms)

    def reversed_reciprocal(self, per_var_degree: int) -> "MPoly":
        """prod_k z_k^d * P(1/z_last, ..., 1/z_first) for d = per_var_degree.

        Exact whenever every exponent is <= d, which is what the degree
        bound guarantees for groundstate components.
        """
        n = self.nvars
        terms = {}
        for e, c in self.terms.items():
            if any(x > per_var_degree for x in e):
                raise ValueError("exponent exceeds the stated per-variable degree")
            ne = tuple(per_var_degree - e[n - 1 - k] for k in range(n))
            terms[ne] = c
        return MPoly(n, terms)

    # -- serialization ----------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], CycloNum]]:
        """Terms in graded-lexicographic order (canonical)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exp": list(e), "coeff": c.to_strings()} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MPoly":
        return cls(
            data["nvars"],
            {
                tuple(t["exp"]): CycloNum.from_strings(t["coeff"])
                for t in data["terms"]
            },
        )

    def __repr__(self) -> str:
        return f"MPoly(nvars={self.nvars}, nterms={len(self.terms)})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"z{v + 1}" + (f"^{k}" if k > 1 else "")
                for v, k in enumerate(e)
                if k
            )
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def product(nvars: int, factors: Iterable[MPoly]) -> MPoly:
    acc = MPoly.constant(nvars, 1)
    for f in factors:
        acc = acc * f
    return acc


def interpolate_grid(
    values: Mapping[tuple, CycloNum],
    degree_bounds: Sequence[int],
    grid: Sequence[Sequence],
) -> MPoly:
    """Reconstruct the unique polynomial within per-variable degree bounds
    matching ``values`` on the full tensor grid.

    ``grid[v]`` lists the (degree_bounds[v] + 1) distinct rational nodes of
    variable v; ``values`` maps full coordinate tuples (in the same node
    values) to CycloNum samples.
    """
    nvars = len(degree_bounds)
    if len(grid) != nvars:
        raise ArityMismatchError("one node list per variable is required")
    nodes: list[list[Fraction]] = []
    for v in range(nvars):
        axis = [Fraction(x) for x in grid[v]]
        if len(set(axis)) != len(axis):
            raise DuplicateNodeError(f"axis {v} has repeated nodes")
        if len(axis) != degree_bounds[v] + 1:
            raise ValueError(
                f"axis {v}: {len(axis)} nodes for degree bound {degree_bounds[v]}"
            )
        nodes.append(axis)

    flat: list[CycloNum] = []
    for point in itertools.product(*nodes):
        if point not in values:
            raise MissingPointError(f"no value supplied for grid point {point}")
        flat.append(_as_cyclo(values[point]))

    # Convert axis by axis: along each grid line, Newton divided
    # differences followed by expansion into monomial coefficients.  The
    # conversions are linear and act on disjoint indices, so after all
    # axes the tensor holds the monomial coefficients directly.
    dims = [len(ax) for ax in nodes]
    stride = 1
    for axis in range(nvars - 1, -1, -1):
        xs = nodes[axis]
        m = dims[axis]
        inv_diff = [
            [
                Fraction(1, xs[k] - xs[k - j]) if j and k >= j else None
                for k in range(m)
            ]
            for j in range(m)
        ]
        block = stride * m
        for outer in range(len(flat) // block):
            base = outer * block
            for inner in range(stride):
                start = base + inner
                line = [flat[start + k * stride] for k in range(m)]
                for j in range(1, m):
                    row = inv_diff[j]
                    for k in range(m - 1, j - 1, -1):
                        line[k] = (line[k] - line[k - 1]) * row[k]
                # expand the Newton form into ascending monomial coefficients
                poly = [line[m - 1]]
                for k in range(m - 2, -1, -1):
                    xk = xs[k]
                    poly = [line[k] - xk * poly[0]] + [
                        poly[i - 1] - xk * poly[i] for i in range(1, len(poly))
                    ] + [poly[-1]]
                for k in range(m):
                    flat[start + k * stride] = poly[k]
        stride = block

    terms: dict[tuple[int, ...], CycloNum] = {}
    for pos, exps in enumerate(itertools.product(*(range(d) for d in dims))):
        c = flat[pos]
        if c:
            terms[exps] = c
    return MPoly(nvars, terms)
