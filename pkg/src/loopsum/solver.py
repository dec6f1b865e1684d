"""Exact dense linear algebra over Q(w).

Plain fraction Gaussian elimination with first-nonzero pivoting: in exact
arithmetic there is no magnitude heuristic to apply, and the matrices here
stay small (a few hundred rows at most).  Nullspace vectors satisfy M v = 0
exactly; solves raise on inconsistent or rank-deficient systems.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cyclo import CycloNum, ONE, ZERO


class InconsistentSystemError(ValueError):
    """The right-hand side is not in the column span."""


class RankDeficiencyError(ValueError):
    """The matrix does not have full column rank."""


def _as_cyclo(x) -> CycloNum:
    if isinstance(x, CycloNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloNum(x, 0)
    raise TypeError(f"bad matrix entry of type {type(x).__name__}")


class ExactMatrix:
    """A dense rows x cols matrix of CycloNum entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence]):
        d = [[_as_cyclo(x) for x in row] for row in data]
        if d:
            w = len(d[0])
            if any(len(r) != w for r in d):
                raise ValueError("ragged rows")
        else:
            w = 0
        object.__setattr__(self, "rows", len(d))
        object.__setattr__(self, "cols", w)
        object.__setattr__(self, "data", d)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable (rebuild instead)")

    def __reduce__(self):
        return (ExactMatrix, (self.data,))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    def __getitem__(self, rc) -> CycloNum:
        r, c = rc
        return self.data[r][c]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ]
        )

    def scale(self, c) -> "ExactMatrix":
        c = _as_cyclo(c)
        return ExactMatrix([[c * x for x in row] for row in self.data])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        bt = list(zip(*other.data))
        out = []
        for row in self.data:
            out.append(
                [
                    sum((a * b for a, b in zip(row, col) if a and b), ZERO)
                    for col in bt
                ]
            )
        return ExactMatrix(out)

    def apply(self, vec: Sequence) -> list[CycloNum]:
        v = [_as_cyclo(x) for x in vec]
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [
            sum((a * x for a, x in zip(row, v) if a and x), ZERO)
            for row in self.data
        ]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.data)))

    def to_json(self) -> list[list[list[str]]]:
        return [[x.to_strings() for x in row] for row in self.data]


def _rref(data: list[list[CycloNum]], width: int) -> tuple[list[list[CycloNum]], list[int]]:
    """In-place reduced row echelon form on the first `width` columns.

    Columns beyond `width` are carried along (augmented part).  Returns the
    row list and the pivot column indices.
    """
    nrows = len(data)
    pivots: list[int] = []
    r = 0
    total = len(data[0]) if data else 0
    for c in range(width):
        pr = next((i for i in range(r, nrows) if data[i][c]), None)
        if pr is None:
            continue
        data[r], data[pr] = data[pr], data[r]
        inv = data[r][c].inverse()
        data[r] = [x * inv for x in data[r]]
        for i in range(nrows):
            if i != r and data[i][c]:
                f = data[i][c]
                ri, rr = data[i], data[r]
                data[i] = [ri[k] - f * rr[k] for k in range(total)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return data, pivots


def rank(m: ExactMatrix) -> int:
    data = [row[:] for row in m.data]
    _, pivots = _rref(data, m.cols)
    return len(pivots)


def nullspace(m: ExactMatrix) -> list[list[CycloNum]]:
    """An exact basis of { v : M v = 0 }; empty for full column rank."""
    data = [row[:] for row in m.data]
    data, pivots = _rref(data, m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * m.cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -data[r][fc]
        basis.append(v)
    return basis


def solve_many(m: ExactMatrix, rhs: ExactMatrix) -> ExactMatrix:
    """Solve M X = RHS for full-column-rank M (raises otherwise)."""
    if m.rows != rhs.rows:
        raise ValueError("row count mismatch")
    data = [mr[:] + rr[:] for mr, rr in zip(m.data, rhs.data)]
    data, pivots = _rref(data, m.cols)
    if len(pivots) != m.cols:
        raise RankDeficiencyError(f"rank {len(pivots)} < {m.cols} columns")
    for r in range(len(pivots), m.rows):
        if any(data[r][m.cols :]):
            raise InconsistentSystemError("right-hand side outside column span")
    x = [[ZERO] * rhs.cols for _ in range(m.cols)]
    for r, pc in enumerate(pivots):
        x[pc] = data[r][m.cols :]
    return ExactMatrix(x)


def solve(m: ExactMatrix, b: Sequence) -> list[CycloNum]:
    rhs = ExactMatrix([[_as_cyclo(x)] for x in b])
    return [row[0] for row in solve_many(m, rhs).data]


def det(m: ExactMatrix) -> CycloNum:
    """Determinant by fraction Gaussian elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    data = [row[:] for row in m.data]
    sign = 1
    acc = ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if data[i][c]), None)
        if pr is None:
            return ZERO
        if pr != c:
            data[c], data[pr] = data[pr], data[c]
            sign = -sign
        piv = data[c][c]
        acc = acc * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if data[i][c]:
                f = data[i][c] * inv
                ri, rc = data[i], data[c]
                data[i] = [ri[k] - f * rc[k] for k in range(n)]
    return acc if sign == 1 else -acc
