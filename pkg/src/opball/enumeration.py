"""Exhaustive enumeration of extreme contractions for small polytopal pairs,
counting, the vertex-preservation (L-P) property check, and composition
closure.

A pair (X, Y) has the L-P property when a norm-one operator X -> Y is an
extreme point of the operator unit ball exactly when it maps every extreme
point of the domain ball to an extreme point of the codomain ball. The check
tests both directions mechanically: the forward direction walks the
enumerated extreme contractions, and the backward direction builds every
linear extension of vertex assignments on a basis and re-decides it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Mat, Vec, invert, mat_mul, rank, transpose, vec
from .lp import LinearProgram, solve
from .operators import LinearOperator, UnsupportedPairError, compose
from .polytopes import SymmetricPolytope, from_facets
from .extremality import ExtremalityVerdict, NotContractionBoundaryError, decide
from .spaces import (
    L1,
    L2,
    LINF,
    InfiniteExtremeSetError,
    NormedSpace,
    extreme_points,
    is_extreme_point,
    linf_space,
    unit_ball,
)


class SizeCapError(ValueError):
    """The operator-ball enumeration would exceed the configured variable cap."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"operator ball in {size} variables exceeds cap {cap}")


OPERATOR_BALL_CAP = 12


@dataclass(frozen=True)
class ExtremeContractionSet:
    """All extreme contractions of a pair, closed under negation and sorted
    lexicographically by matrix entries."""

    domain: NormedSpace
    codomain: NormedSpace
    operators: tuple[LinearOperator, ...]
    method: str

    def __len__(self) -> int:
        return len(self.operators)

    def matrices(self) -> tuple[Mat, ...]:
        return tuple(T.matrix for T in self.operators)


def _canonical_set(
    domain: NormedSpace, codomain: NormedSpace, mats: set[Mat], method: str
) -> ExtremeContractionSet:
    ops = tuple(
        LinearOperator(m, domain, codomain) for m in sorted(mats)
    )
    return ExtremeContractionSet(domain, codomain, ops, method)


def enumerate_l1(domain: NormedSpace, codomain: NormedSpace) -> ExtremeContractionSet:
    """All maps sending each basis pair of an l1 domain to an extreme point of
    the codomain ball; there are exactly (2p)^n of them for p vertex pairs."""
    if domain.kind != L1:
        raise UnsupportedPairError("direct enumeration needs an l1 domain")
    if codomain.kind == L2:
        raise InfiniteExtremeSetError(
            "a strictly convex codomain carries infinitely many extreme contractions"
        )
    targets = extreme_points(codomain).signed()
    n = domain.dim
    mats: set[Mat] = set()
    for columns in itertools.product(targets, repeat=n):
        mats.add(transpose(columns))
    assert len(mats) == len(targets) ** n
    return _canonical_set(domain, codomain, mats, "l1_direct")


def operator_ball(
    domain: NormedSpace, codomain: NormedSpace, cap: int = OPERATOR_BALL_CAP
) -> SymmetricPolytope:
    """The unit ball of the operator space as a polytope in the m*n matrix
    entries (row-major): an operator is a contraction iff every extreme point
    of the domain ball lands inside the codomain ball."""
    if not (domain.has_polytopal_ball and codomain.has_polytopal_ball):
        raise UnsupportedPairError("operator ball needs polytopal balls on both sides")
    m, n = codomain.dim, domain.dim
    size = m * n
    if size > cap:
        raise SizeCapError(size, cap)
    verts = extreme_points(domain).representatives
    facets = unit_ball(codomain).facets
    functionals = [
        tuple(f[i] * v[j] for i in range(m) for j in range(n))
        for v in verts
        for f in facets
    ]
    return from_facets(functionals)


def enumerate_operator_ball(
    domain: NormedSpace,
    codomain: NormedSpace,
    cap: int = OPERATOR_BALL_CAP,
    cross_validate: bool = True,
) -> ExtremeContractionSet:
    """Vertex enumeration of the operator ball; every member is re-decided."""
    ball = operator_ball(domain, codomain, cap)
    m, n = codomain.dim, domain.dim
    mats: set[Mat] = set()
    for rep in ball.vertices:
        M = tuple(tuple(rep[i * n + j] for j in range(n)) for i in range(m))
        mats.add(M)
        mats.add(tuple(tuple(-e for e in row) for row in M))
    result = _canonical_set(domain, codomain, mats, "operator_ball_vertices")
    if cross_validate:
        for T in result.operators:
            assert decide(T).is_extreme, "ball vertex rejected by the decision rules"
    return result


def enumerate_extreme_contractions(
    domain: NormedSpace, codomain: NormedSpace, cap: int = OPERATOR_BALL_CAP
) -> ExtremeContractionSet:
    if domain.kind == L1 and codomain.kind != L2:
        return enumerate_l1(domain, codomain)
    return enumerate_operator_ball(domain, codomain, cap)


@dataclass(frozen=True)
class LPPropertyReport:
    """Outcome of the vertex-preservation check for a pair of spaces.

    forward_violations: extreme contractions T together with an extreme point
    of the domain ball whose image is not extreme in the codomain ball.
    backward_violations: norm-one operators mapping extreme points to extreme
    points that are nevertheless not extreme contractions.
    """

    domain: NormedSpace
    codomain: NormedSpace
    holds: bool
    forward_violations: tuple[tuple[LinearOperator, Vec], ...]
    backward_violations: tuple[tuple[LinearOperator, ExtremalityVerdict], ...]
    notes: tuple[str, ...] = field(default=())


def _strictly_convex_domain_report(
    domain: NormedSpace, codomain: NormedSpace
) -> LPPropertyReport:
    """A strictly convex domain fails against any polytopal codomain; the
    constructive witness is available for linf of the same dimension: the
    operator repeating the first coordinate has unit rows (so it is extreme)
    yet sends a rational unit vector strictly inside the codomain ball."""
    if not (codomain.kind == LINF and codomain.dim == domain.dim and domain.dim >= 2):
        raise UnsupportedPairError(
            "constructive failure witness needs codomain linf of matching dimension >= 2"
        )
    n = domain.dim
    rows = [[Fraction(1)] + [Fraction(0)] * (n - 1) for _ in range(n)]
    T = LinearOperator(tuple(tuple(r) for r in rows), domain, codomain)
    verdict = decide(T)
    assert verdict.is_extreme
    point = vec(["3/5", "4/5"] + ["0"] * (n - 2))
    image = T(point)
    assert not is_extreme_point(codomain, image)
    return LPPropertyReport(
        domain,
        codomain,
        holds=False,
        forward_violations=((T, point),),
        backward_violations=(),
        notes=(
            "strictly convex domain: extreme contraction with a unit vector "
            "mapped off the codomain's extreme points",
        ),
    )


def _independent_basis(reps: tuple[Vec, ...], dim: int) -> tuple[Vec, ...]:
    basis: list[Vec] = []
    for v in reps:
        if rank(basis + [v]) > len(basis):
            basis.append(v)
            if len(basis) == dim:
                return tuple(basis)
    raise ValueError("extreme points do not span the space")


def backward_candidates(domain: NormedSpace, codomain: NormedSpace):
    """Yield every norm-one operator with T(E_X) inside E_Y, built by
    assigning codomain vertices to a fixed independent basis of domain
    vertices and extending linearly; linearity settles the remaining extreme
    points, which are checked for membership."""
    reps = extreme_points(domain).representatives
    basis = _independent_basis(reps, domain.dim)
    others = [v for v in reps if v not in set(basis)]
    Vinv = invert(transpose(basis))
    targets = extreme_points(codomain).signed()
    for images in itertools.product(targets, repeat=domain.dim):
        M = mat_mul(transpose(images), Vinv)
        T = LinearOperator(M, domain, codomain)
        if all(is_extreme_point(codomain, T(v)) for v in others):
            yield T


def check_lp_property(
    domain: NormedSpace,
    codomain: NormedSpace,
    cap: int = OPERATOR_BALL_CAP,
    backward_only: bool = False,
    stop_at_first: bool = False,
) -> LPPropertyReport:
    """Decide whether the pair has the vertex-preservation property.

    backward_only skips the forward enumeration (used when the operator ball
    exceeds the size cap); stop_at_first returns at the first backward
    violation found.
    """
    if domain.kind == L2:
        return _strictly_convex_domain_report(domain, codomain)
    if not domain.has_polytopal_ball:
        raise UnsupportedPairError(f"unsupported domain {domain.describe()}")
    notes: list[str] = []
    forward: list[tuple[LinearOperator, Vec]] = []
    if backward_only:
        notes.append("forward direction skipped (enumeration above size cap)")
    else:
        contractions = enumerate_extreme_contractions(domain, codomain, cap)
        notes.append(
            f"forward: {len(contractions)} extreme contractions via {contractions.method}"
        )
        domain_reps = extreme_points(domain).representatives
        for T in contractions.operators:
            for v in domain_reps:
                if not is_extreme_point(codomain, T(v)):
                    forward.append((T, v))
    backward: list[tuple[LinearOperator, ExtremalityVerdict]] = []
    n_candidates = 0
    for T in backward_candidates(domain, codomain):
        n_candidates += 1
        verdict = decide(T)
        if not verdict.is_extreme:
            backward.append((T, verdict))
            if stop_at_first:
                break
    notes.append(f"backward: {n_candidates} vertex-assignment candidates tested")
    return LPPropertyReport(
        domain,
        codomain,
        holds=not forward and not backward,
        forward_violations=tuple(forward),
        backward_violations=tuple(backward),
        notes=tuple(notes),
    )


def find_forward_violation(
    domain: NormedSpace,
    codomain: NormedSpace,
    max_trials: int = 500,
    seed: int = 7,
    span: int = 999,
) -> tuple[LinearOperator, Vec, ExtremalityVerdict] | None:
    """Search for an extreme contraction that maps some extreme point of the
    domain ball to a non-extreme point of the codomain ball, without
    enumerating the full operator ball.

    Random integer objectives are maximized over the operator-ball
    inequalities with the exact LP solver. A trial can only produce a
    candidate when the LP optimum strictly exceeds the best value over every
    vertex-preserving operator, which certifies that the entire optimal face
    is non-preserving; the candidate is then confirmed through decide(). The
    search is deterministic for a fixed seed. Returns (operator, violated
    extreme point, verdict) or None if no trial lands on a ball vertex.
    """
    if not (domain.has_polytopal_ball and codomain.has_polytopal_ball):
        raise UnsupportedPairError("forward search needs polytopal balls")
    m, n = codomain.dim, domain.dim
    verts = extreme_points(domain).representatives
    facets = unit_ball(codomain).facets
    constraints = []
    for v in verts:
        for f in facets:
            g = tuple(f[i] * v[j] for i in range(m) for j in range(n))
            constraints.append((g, Fraction(1)))
            constraints.append((tuple(-x for x in g), Fraction(1)))
    constraints = tuple(constraints)
    preserving = [
        tuple(S.matrix[i][j] for i in range(m) for j in range(n))
        for S in backward_candidates(domain, codomain)
    ]
    rng = random.Random(seed)
    for _ in range(max_trials):
        c = tuple(Fraction(rng.randint(-span, span)) for _ in range(m * n))
        best_preserving = max(
            sum(ci * xi for ci, xi in zip(c, x)) for x in preserving
        )
        result = solve(LinearProgram(c, constraints, m * n), verify=False)
        if result.status != "optimal" or result.optimum <= best_preserving:
            continue
        M = tuple(
            tuple(result.primal_point[i * n + j] for j in range(n)) for i in range(m)
        )
        T = LinearOperator(M, domain, codomain)
        try:
            verdict = decide(T)
        except NotContractionBoundaryError:
            continue
        if not verdict.is_extreme:
            continue
        for v in verts:
            if not is_extreme_point(codomain, T(v)):
                return T, v, verdict
    return None


@dataclass(frozen=True)
class CompositionClosureReport:
    total_pairs: int
    failures: tuple[tuple[LinearOperator, LinearOperator], ...]
    note: str

    @property
    def closed(self) -> bool:
        return not self.failures


def composition_closure(contractions: ExtremeContractionSet) -> CompositionClosureReport:
    """Test whether composing any two members stays extreme. Closure holds
    exactly when the forward vertex-preservation direction does, since images
    of vertices under vertex-preserving maps compose."""
    if contractions.domain != contractions.codomain:
        raise UnsupportedPairError("composition closure needs domain == codomain")
    failures = []
    ops = contractions.operators
    for T1 in ops:
        for T2 in ops:
            try:
                ok = decide(compose(T1, T2)).is_extreme
            except NotContractionBoundaryError:
                ok = False  # the composed norm dropped below 1
            if not ok:
                failures.append((T1, T2))
    note = (
        "closed under composition; consistent with the forward "
        "vertex-preservation direction"
        if not failures
        else f"{len(failures)} compositions left the extreme set"
    )
    return CompositionClosureReport(len(ops) ** 2, tuple(failures), note)
