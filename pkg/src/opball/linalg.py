"""Exact rational vectors, matrices, and elimination primitives.

Scalars are ``fractions.Fraction`` throughout: always in lowest terms with a
positive denominator, so equality and lexicographic comparison are canonical.
Vectors are plain tuples of Fractions and matrices are tuples of row tuples;
both are hashable and compare lexicographically, which the rest of the
package relies on for canonical orderings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?\Z")


class DimensionMismatchError(ValueError):
    """Operands do not share the required dimensions."""


class RationalFormatError(ValueError):
    """Text is not of the form "p" or "p/q" with integer p and positive q."""


def parse_rational(text: str) -> Fraction:
    """Parse the only accepted number format: "p" or "p/q", optional leading "-".

    Decimal notation ("1.5"), whitespace, and signs inside the denominator are
    rejected so that input files cannot smuggle in non-rational syntax.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise RationalFormatError(f"not a rational literal: {text!r}")
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    """Inverse of parse_rational: "p/q" or "p" in lowest terms."""
    return str(q)


def vec(entries: Iterable) -> Vec:
    return tuple(Fraction(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> Mat:
    m = tuple(vec(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionMismatchError("ragged matrix rows")
    return m


def zero_vec(dim: int) -> Vec:
    return (Fraction(0),) * dim


def unit_vec(i: int, dim: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(dim))


def dot(u: Vec, v: Vec) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatchError(f"dot of length {len(u)} with {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionMismatchError("vector lengths differ")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionMismatchError("vector lengths differ")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Fraction, u: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def canonical_sign(v: Vec) -> Vec:
    """Canonical representative of the pair {v, -v}: the lexicographically larger one.

    Equivalently the one whose first nonzero entry is positive. Undefined for
    the zero vector, which is returned unchanged.
    """
    for a in v:
        if a > 0:
            return v
        if a < 0:
            return vneg(v)
    return v


def mat_vec(A: Mat, x: Vec) -> Vec:
    return tuple(dot(row, x) for row in A)


def mat_mul(A: Mat, B: Mat) -> Mat:
    if A and B and len(A[0]) != len(B):
        raise DimensionMismatchError("inner dimensions differ")
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def transpose(A: Mat) -> Mat:
    return tuple(zip(*A)) if A else ()


def mat_add(A: Mat, B: Mat) -> Mat:
    return tuple(vadd(r, s) for r, s in zip(A, B))


def mat_sub(A: Mat, B: Mat) -> Mat:
    return tuple(vsub(r, s) for r, s in zip(A, B))


def mat_neg(A: Mat) -> Mat:
    return tuple(vneg(r) for r in A)


def is_zero_mat(A: Mat) -> bool:
    return all(is_zero_vec(r) for r in A)


def identity_mat(n: int) -> Mat:
    return tuple(unit_vec(i, n) for i in range(n))


def _bit_size(q: Fraction) -> int:
    return abs(q.numerator).bit_length() + q.denominator.bit_length()


def _eliminate(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Row-reduce in place; returns (rows, pivot column indices).

    Pivot choice within a column: the nonzero candidate of smallest bit size,
    ties broken by lowest row index. This bounds coefficient growth while
    keeping the elimination deterministic.
    """
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                size = _bit_size(rows[i][c])
                if best is None or size < best[0]:
                    best = (size, i)
        if best is None:
            continue
        i = best[1]
        rows[r], rows[i] = rows[i], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(vectors: Sequence[Vec]) -> int:
    """Dimension of the linear span, by exact Gaussian elimination. 0 for []."""
    if not vectors:
        return 0
    dim = len(vectors[0])
    if any(len(v) != dim for v in vectors):
        raise DimensionMismatchError("rank of vectors with mixed dimensions")
    rows = [[Fraction(x) for x in v] for v in vectors]
    _, pivots = _eliminate(rows, dim)
    return len(pivots)


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of solve_linear: status is "unique", "underdetermined", or "inconsistent".

    For solvable systems ``x`` is one exact solution (free variables set to 0);
    for inconsistent systems ``x`` is None.
    """

    status: str
    x: Vec | None

    @property
    def solvable(self) -> bool:
        return self.status != "inconsistent"


def solve_linear(A: Mat, b: Vec) -> LinearSolution:
    """Exact solution of A.x = b, flagging underdetermined and inconsistent systems."""
    m = len(A)
    if len(b) != m:
        raise DimensionMismatchError("A and b row counts differ")
    n = len(A[0]) if m else 0
    rows = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(m)]
    rows, pivots = _eliminate(rows, n)
    npiv = len(pivots)
    for i in range(npiv, m):
        if rows[i][n] != 0:
            return LinearSolution("inconsistent", None)
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    status = "unique" if npiv == n else "underdetermined"
    return LinearSolution(status, tuple(x))


def null_space_vector(vectors: Sequence[Vec], dim: int) -> Vec | None:
    """One nonzero vector orthogonal to all of ``vectors``, or None if they span."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    rows, pivots = _eliminate(rows, dim)
    if len(pivots) == dim:
        return None
    free = next(c for c in range(dim) if c not in pivots)
    x = [Fraction(0)] * dim
    x[free] = Fraction(1)
    for i, c in enumerate(pivots):
        x[c] = -rows[i][free]
    return tuple(x)


def invert(A: Mat) -> Mat:
    """Exact inverse of a square matrix; raises on singular input."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionMismatchError("inverse of a non-square matrix")
    rows = [[Fraction(x) for x in A[i]] + list(unit_vec(i, n)) for i in range(n)]
    rows, pivots = _eliminate(rows, n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return tuple(tuple(rows[i][n:]) for i in range(n))
