"""Finite-dimensional normed spaces: polytopal balls and the named l1/l2/linf norms.

Every norm evaluation is exact. The Euclidean norm never leaves the rationals:
it is always reported as the squared value, and every comparison the package
makes against it happens on squares.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import polytopes
from .linalg import DimensionMismatchError, Vec, canonical_sign, dot, unit_vec, vec
from .lp import LinearProgram, solve
from .polytopes import SymmetricPolytope

L1 = "l1"
L2 = "l2"
LINF = "linf"
POLYTOPAL = "polytopal"


class InfiniteExtremeSetError(ValueError):
    """The unit ball has infinitely many extreme points (Euclidean norm)."""


class UnsupportedSpaceError(ValueError):
    """Operation not defined for this space kind."""


@dataclass(frozen=True)
class NormValue:
    """Exact norm: a rational, or a rational square when ``squared`` is True."""

    value: Fraction
    squared: bool = False

    def compare_one(self) -> int:
        """-1, 0, or 1 as the norm is below, at, or above 1. Valid for squared
        values because squaring is monotone on nonnegatives."""
        if self.value < 1:
            return -1
        return 0 if self.value == 1 else 1

    @property
    def is_one(self) -> bool:
        return self.value == 1

    def __str__(self) -> str:
        return f"({self.value})^(1/2)" if self.squared else str(self.value)


@dataclass(frozen=True)
class NormedSpace:
    """A space R^dim tagged with its norm.

    kind is one of "l1", "l2", "linf", or "polytopal"; only the last carries
    an explicit ball. l2 is the single strictly convex case.
    """

    kind: str
    dim: int
    ball: SymmetricPolytope | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise UnsupportedSpaceError("dimension must be positive")
        if self.kind == POLYTOPAL:
            if self.ball is None or self.ball.dim != self.dim:
                raise DimensionMismatchError("polytopal space needs a ball of its dimension")
        elif self.kind not in (L1, L2, LINF):
            raise UnsupportedSpaceError(f"unknown space kind {self.kind!r}")

    @property
    def strictly_convex(self) -> bool:
        return self.kind == L2

    @property
    def has_polytopal_ball(self) -> bool:
        return self.kind in (POLYTOPAL, L1, LINF)

    def describe(self) -> str:
        if self.kind == POLYTOPAL:
            return f"polytopal:{self.dim}({len(self.ball.vertices)} vertex pairs)"
        return f"{self.kind}:{self.dim}"


@dataclass(frozen=True)
class ExtremeSet:
    """Extreme points of a unit ball, one representative per +- pair."""

    representatives: tuple[Vec, ...]
    pair_count: int

    def signed(self) -> tuple[Vec, ...]:
        return self.representatives + tuple(
            tuple(-x for x in v) for v in self.representatives
        )


def l1_space(dim: int) -> NormedSpace:
    return NormedSpace(L1, dim)


def l2_space(dim: int) -> NormedSpace:
    return NormedSpace(L2, dim)


def linf_space(dim: int) -> NormedSpace:
    return NormedSpace(LINF, dim)


def polytopal_space(ball: SymmetricPolytope) -> NormedSpace:
    return NormedSpace(POLYTOPAL, ball.dim, ball)


def space_from_vertices(points: Iterable[Vec]) -> NormedSpace:
    return polytopal_space(polytopes.from_vertices(list(points)))


def cross_polytope(dim: int) -> SymmetricPolytope:
    """Unit ball of l1^dim: vertices +-e_i, facets all sign functionals."""
    verts = tuple(unit_vec(i, dim) for i in range(dim))
    facets = _sign_vector_reps(dim)
    return SymmetricPolytope(dim, tuple(sorted(verts)), tuple(sorted(facets)))


def cube(dim: int) -> SymmetricPolytope:
    """Unit ball of linf^dim: vertices all sign vectors, facets +-e_i*."""
    facets = tuple(unit_vec(i, dim) for i in range(dim))
    verts = _sign_vector_reps(dim)
    return SymmetricPolytope(dim, tuple(sorted(verts)), tuple(sorted(facets)))


def hexagon_space() -> NormedSpace:
    """A two-dimensional polytopal space with three vertex pairs."""
    return space_from_vertices(
        [vec(["1", "0"]), vec(["1/2", "1"]), vec(["-1/2", "1"])]
    )


def _sign_vector_reps(dim: int) -> tuple[Vec, ...]:
    one = Fraction(1)
    return tuple(
        (one,) + tail
        for tail in itertools.product((one, -one), repeat=dim - 1)
    )


def unit_ball(space: NormedSpace) -> SymmetricPolytope:
    """Explicit polytopal ball for any non-Euclidean space."""
    if space.kind == POLYTOPAL:
        return space.ball
    if space.kind == L1:
        return cross_polytope(space.dim)
    if space.kind == LINF:
        return cube(space.dim)
    raise UnsupportedSpaceError("the Euclidean ball is not a polytope")


def norm(space: NormedSpace, x: Vec) -> NormValue:
    """Exact norm of x; the l2 case returns the squared value."""
    if len(x) != space.dim:
        raise DimensionMismatchError("vector dimension differs from space")
    if space.kind == L1:
        return NormValue(sum((abs(a) for a in x), Fraction(0)))
    if space.kind == LINF:
        return NormValue(max(abs(a) for a in x))
    if space.kind == L2:
        return NormValue(sum((a * a for a in x), Fraction(0)), squared=True)
    return NormValue(max(abs(dot(f, x)) for f in space.ball.facets))


def gauge_norm_vrep(space: NormedSpace, x: Vec) -> Fraction:
    """Minkowski gauge evaluated from the vertex description by linear
    programming: the least total weight writing x as a combination of signed
    vertices. Agrees exactly with facet evaluation; serves as its independent
    cross-check."""
    if not space.has_polytopal_ball:
        raise UnsupportedSpaceError("gauge evaluation needs a polytopal ball")
    if len(x) != space.dim:
        raise DimensionMismatchError("vector dimension differs from space")
    gens = unit_ball(space).signed_vertices()
    k = len(gens)
    minus_one = Fraction(-1)
    constraints: list[tuple[Vec, Fraction]] = []
    for j in range(k):
        row = [Fraction(0)] * k
        row[j] = minus_one
        constraints.append((tuple(row), Fraction(0)))
    for c in range(space.dim):
        row = tuple(gens[j][c] for j in range(k))
        constraints.append((row, x[c]))
        constraints.append((tuple(-e for e in row), -x[c]))
    lp = LinearProgram((minus_one,) * k, tuple(constraints), k)
    result = solve(lp)
    assert result.status == "optimal"  # vertices span, weights bounded below
    return -result.optimum


def extreme_points(space: NormedSpace) -> ExtremeSet:
    """The finite extreme set of the unit ball; rejects the Euclidean norm."""
    if space.kind == L2:
        raise InfiniteExtremeSetError(
            "every unit vector is extreme in the Euclidean ball"
        )
    reps = unit_ball(space).vertices
    return ExtremeSet(reps, len(reps))


def dual(space: NormedSpace) -> NormedSpace:
    """Dual-norm space: l1 <-> linf, l2 self-dual, polytopal -> polar ball."""
    if space.kind == L1:
        return linf_space(space.dim)
    if space.kind == LINF:
        return l1_space(space.dim)
    if space.kind == L2:
        return l2_space(space.dim)
    return polytopal_space(space.ball.polar())


def extreme_membership_decidable(space: NormedSpace) -> bool:
    return True if space.kind == L2 else space.has_polytopal_ball


def is_extreme_point(space: NormedSpace, x: Vec) -> bool:
    """Is x an extreme point of the unit ball? For l2 this is exactly the
    squared-norm-one test."""
    if space.kind == L2:
        return norm(space, x).is_one
    return unit_ball(space).is_vertex(x)


def boundary_non_extreme_point(space: NormedSpace) -> Vec | None:
    """Some norm-one point that is not extreme, when one exists: the midpoint
    of two distinct vertices on a common facet, rescaled to the boundary."""
    if space.kind == L2:
        return None
    ball = unit_ball(space)
    signed = ball.signed_vertices()
    for f in ball.facets:
        tight = [v for v in signed if dot(f, v) == 1]
        if len(tight) >= 2:
            mid = tuple((a + b) / 2 for a, b in zip(tight[0], tight[1]))
            g = norm(space, mid).value
            assert g == 1  # midpoint stays on the facet f.x = 1
            if not ball.is_vertex(mid):
                return mid
    return None


def canonical_rep(x: Vec) -> Vec:
    return canonical_sign(x)
