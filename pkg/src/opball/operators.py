"""Linear operators between normed spaces: exact operator norm, the set of
extreme points where the norm is attained, and the adjoint.

For a domain with finitely many extreme points, the operator norm is the
maximum of the image norms over those points (a convex function on the ball
peaks at a vertex). The one supported strictly convex domain is l2^n mapping
into linf^n, where the norm is the largest Euclidean row norm, handled as a
squared value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    DimensionMismatchError,
    Mat,
    Vec,
    canonical_sign,
    is_zero_vec,
    mat,
    mat_mul,
    mat_vec,
    rank,
    transpose,
)
from .spaces import (
    L2,
    LINF,
    ExtremeSet,
    NormValue,
    NormedSpace,
    dual,
    extreme_points,
    norm,
)


class UnsupportedPairError(ValueError):
    """No exact procedure exists for this domain/codomain combination."""


@dataclass(frozen=True)
class LinearOperator:
    """Matrix action x -> matrix.x with explicit domain and codomain."""

    matrix: Mat
    domain: NormedSpace
    codomain: NormedSpace

    def __post_init__(self):
        if len(self.matrix) != self.codomain.dim:
            raise DimensionMismatchError("matrix row count differs from codomain dim")
        if any(len(r) != self.domain.dim for r in self.matrix):
            raise DimensionMismatchError("matrix column count differs from domain dim")

    def __call__(self, x: Vec) -> Vec:
        return mat_vec(self.matrix, x)

    def column(self, j: int) -> Vec:
        return tuple(row[j] for row in self.matrix)

    def negate(self) -> "LinearOperator":
        return LinearOperator(
            tuple(tuple(-e for e in row) for row in self.matrix),
            self.domain,
            self.codomain,
        )


def operator(rows, domain: NormedSpace, codomain: NormedSpace) -> LinearOperator:
    return LinearOperator(mat(rows), domain, codomain)


def compose(first: LinearOperator, second: LinearOperator) -> LinearOperator:
    """first o second: apply second, then first."""
    if second.codomain != first.domain:
        raise DimensionMismatchError("composition spaces do not match")
    return LinearOperator(
        mat_mul(first.matrix, second.matrix), second.domain, first.codomain
    )


def adjoint(T: LinearOperator) -> LinearOperator:
    """Transpose matrix acting between the dual spaces, in reverse order."""
    return LinearOperator(transpose(T.matrix), dual(T.codomain), dual(T.domain))


@dataclass(frozen=True)
class NormAttainment:
    """Operator norm together with the extreme points attaining it.

    attaining_extremes holds one representative per +- pair. For an l2 domain
    they are the maximal matrix rows, kept unnormalized (their Euclidean
    length may be irrational); when the norm is 1 they are already unit
    vectors. span_rank is the rank of the attaining set.
    """

    operator_norm: NormValue
    attaining_extremes: tuple[Vec, ...]
    span_rank: int


def _is_l2_to_linf(T: LinearOperator) -> bool:
    return (
        T.domain.kind == L2
        and T.codomain.kind == LINF
        and T.domain.dim == T.codomain.dim
    )


def attainment(T: LinearOperator) -> NormAttainment:
    """Exact operator norm and the extreme points achieving it."""
    if T.domain.has_polytopal_ball:
        reps = extreme_points(T.domain).representatives
        values = [norm(T.codomain, T(v)) for v in reps]
        best = max(v.value for v in values)
        attaining = tuple(
            v for v, nv in zip(reps, values) if nv.value == best
        )
        return NormAttainment(
            NormValue(best, values[0].squared), attaining, rank(attaining)
        )
    if _is_l2_to_linf(T):
        sq = [sum((a * a for a in row), Fraction(0)) for row in T.matrix]
        best = max(sq)
        seen: dict[Vec, None] = {}
        for row, s in zip(T.matrix, sq):
            if s == best and not is_zero_vec(row):
                seen.setdefault(canonical_sign(row))
        attaining = tuple(sorted(seen))
        return NormAttainment(NormValue(best, squared=True), attaining, rank(attaining))
    raise UnsupportedPairError(
        f"operator norm undefined for {T.domain.describe()} -> {T.codomain.describe()}"
    )


def op_norm(T: LinearOperator) -> NormValue:
    return attainment(T).operator_norm
