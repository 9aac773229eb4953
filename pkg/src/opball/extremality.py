"""Decide whether a norm-one operator is an extreme point of the operator unit ball.

Three fast characterizations are dispatched by space kind, with a linear
programming oracle covering every polytopal-to-polytopal pair:

  rank_test            polytopal domain, Euclidean codomain: extreme exactly
                       when the norm-attaining extreme points span the domain.
  l1_rule              l1 domain: extreme exactly when every +-e_i attains the
                       norm and every column is an extreme point of the
                       codomain ball.
  unit_row_rule        l2^n -> linf^n: extreme exactly when every matrix row
                       has squared Euclidean norm 1; decided by applying the
                       l1 rule to the adjoint.
  perturbation_oracle  both balls polytopal: T is extreme iff the polytope of
                       perturbations {D : norm(T+D) <= 1 and norm(T-D) <= 1}
                       is exactly {0}, which 2mn coordinate LPs decide.

Every "not extreme" verdict ships a nonzero witness D with both perturbed
norms re-verified at most 1, so T = ((T+D) + (T-D)) / 2 exhibits T as a
midpoint of two distinct contractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Mat,
    Vec,
    dot,
    is_zero_mat,
    null_space_vector,
    rank,
    unit_vec,
    vneg,
)
from .lp import ObjectiveSweep
from .operators import (
    LinearOperator,
    NormAttainment,
    UnsupportedPairError,
    adjoint,
    attainment,
)
from .spaces import (
    L1,
    L2,
    LINF,
    NormedSpace,
    extreme_points,
    is_extreme_point,
    norm,
    unit_ball,
)

EXTREME = "extreme"
NOT_EXTREME = "not_extreme"

RANK_TEST = "rank_test"
L1_RULE = "l1_rule"
UNIT_ROW_RULE = "unit_row_rule"
PERTURBATION_ORACLE = "perturbation_oracle"


class NotContractionBoundaryError(ValueError):
    """The operator norm is not exactly 1.

    Operators of norm below 1 are never extreme points of the ball here, and
    operators of norm above 1 are not contractions at all; the message says
    which side the input fell on.
    """

    def __init__(self, value, squared: bool):
        self.norm_value = value
        self.squared = squared
        shown = f"({value})^(1/2)" if squared else str(value)
        side = (
            "below 1: a strict contraction is never an extreme point"
            if value < 1
            else "above 1: not a contraction"
        )
        super().__init__(f"operator norm {shown} is {side}")


@dataclass(frozen=True)
class ExtremalityVerdict:
    decision: str
    method: str
    witness: Mat | None
    evidence: NormAttainment

    @property
    def is_extreme(self) -> bool:
        return self.decision == EXTREME


def _require_norm_one(T: LinearOperator) -> NormAttainment:
    att = attainment(T)
    if not att.operator_norm.is_one:
        raise NotContractionBoundaryError(
            att.operator_norm.value, att.operator_norm.squared
        )
    return att


def _checked_witness(T: LinearOperator, D: Mat) -> Mat:
    """Enforce the verdict invariant: D != 0 and norm(T +- D) <= 1, checked
    through the operator norm itself."""
    assert not is_zero_mat(D), "witness must be nonzero"
    for sign in (1, -1):
        perturbed = LinearOperator(
            tuple(
                tuple(t + sign * d for t, d in zip(trow, drow))
                for trow, drow in zip(T.matrix, D)
            ),
            T.domain,
            T.codomain,
        )
        assert attainment(perturbed).operator_norm.compare_one() <= 0, (
            "witness fails the perturbed-norm check"
        )
    return D


def applicable_rules(T: LinearOperator) -> tuple[str, ...]:
    """Most specific first; empty when the pair is unsupported."""
    rules: list[str] = []
    dom, cod = T.domain, T.codomain
    if dom.kind == L1 and (cod.has_polytopal_ball or cod.kind == L2):
        rules.append(L1_RULE)
    if dom.has_polytopal_ball and cod.kind == L2:
        rules.append(RANK_TEST)
    if dom.kind == L2 and cod.kind == LINF and dom.dim == cod.dim:
        rules.append(UNIT_ROW_RULE)
    if dom.has_polytopal_ball and cod.has_polytopal_ball:
        rules.append(PERTURBATION_ORACLE)
    return tuple(rules)


def decide(T: LinearOperator, cross_check: bool = False) -> ExtremalityVerdict:
    """Route to the most specific applicable rule.

    With cross_check=True every applicable rule is run and their decisions
    must coincide; the most specific verdict is returned. Raises
    NotContractionBoundaryError unless the operator norm is exactly 1 and
    UnsupportedPairError when no rule applies.
    """
    rules = applicable_rules(T)
    if not rules:
        raise UnsupportedPairError(
            f"no decision rule for {T.domain.describe()} -> {T.codomain.describe()}"
        )
    _require_norm_one(T)
    dispatch = {
        L1_RULE: l1_rule,
        RANK_TEST: rank_test,
        UNIT_ROW_RULE: unit_row_rule,
        PERTURBATION_ORACLE: perturbation_oracle,
    }
    verdict = dispatch[rules[0]](T)
    if cross_check:
        for name in rules[1:]:
            other = dispatch[name](T)
            assert other.decision == verdict.decision, (
                f"{name} disagrees with {verdict.method} on decision"
            )
    return verdict


def rank_test(T: LinearOperator) -> ExtremalityVerdict:
    """Polytopal domain into a strictly convex codomain: extreme iff the
    attaining extreme points span the whole domain."""
    if not (T.domain.has_polytopal_ball and T.codomain.kind == L2):
        raise UnsupportedPairError("rank test needs polytopal -> l2")
    att = _require_norm_one(T)
    if att.span_rank == T.domain.dim:
        return ExtremalityVerdict(EXTREME, RANK_TEST, None, att)
    D = _rank_deficiency_witness(T, att)
    return ExtremalityVerdict(NOT_EXTREME, RANK_TEST, _checked_witness(T, D), att)


def _rank_deficiency_witness(T: LinearOperator, att: NormAttainment) -> Mat:
    """Rank-one perturbation w (x) phi with phi vanishing on the attaining
    span, scaled so the squared image norms stay at most 1 on the finitely
    many non-attaining extreme points."""
    n, m = T.domain.dim, T.codomain.dim
    phi = null_space_vector(att.attaining_extremes, n)
    assert phi is not None  # span_rank < n
    t = Fraction(1)
    for v in extreme_points(T.domain).representatives:
        c = dot(phi, v)
        if c == 0:
            continue
        image = T(v)
        eps = 1 - norm(T.codomain, image).value  # 1 - |Tv|^2 > 0 off the attaining set
        alpha = 2 * abs(c * image[0])
        beta = c * c
        t = min(t, eps / (alpha + beta))
    assert t > 0
    row0 = tuple(t * x for x in phi)
    return (row0,) + tuple((Fraction(0),) * n for _ in range(m - 1))


def l1_rule(T: LinearOperator) -> ExtremalityVerdict:
    """l1 domain: extreme iff every basis pair attains the norm and every
    column is an extreme point of the codomain ball."""
    if T.domain.kind != L1:
        raise UnsupportedPairError("l1 rule needs an l1 domain")
    if not (T.codomain.has_polytopal_ball or T.codomain.kind == L2):
        raise UnsupportedPairError("codomain has no decidable extreme membership")
    att = _require_norm_one(T)
    n = T.domain.dim
    for j in range(n):
        col = T.column(j)
        if not norm(T.codomain, col).is_one:
            D = _small_column_witness(T, j, col)
            return ExtremalityVerdict(NOT_EXTREME, L1_RULE, _checked_witness(T, D), att)
    for j in range(n):
        col = T.column(j)
        if not is_extreme_point(T.codomain, col):
            D = _flat_face_witness(T, j, col)
            return ExtremalityVerdict(NOT_EXTREME, L1_RULE, _checked_witness(T, D), att)
    return ExtremalityVerdict(EXTREME, L1_RULE, None, att)


def _column_perturbation(T: LinearOperator, j: int, direction: Vec) -> Mat:
    n = T.domain.dim
    return tuple(
        tuple(direction[i] if c == j else Fraction(0) for c in range(n))
        for i in range(T.codomain.dim)
    )


def _small_column_witness(T: LinearOperator, j: int, col: Vec) -> Mat:
    """Column j has norm below 1: nudge it along +-e_1 by an exactly safe step."""
    w = unit_vec(0, T.codomain.dim)
    if T.codomain.kind == L2:
        eps = 1 - norm(T.codomain, col).value
        t = min(Fraction(1), eps / (2 * abs(col[0]) + 1))
    else:
        eps = 1 - norm(T.codomain, col).value
        t = eps / norm(T.codomain, w).value
    return _column_perturbation(T, j, tuple(t * x for x in w))


def _flat_face_witness(T: LinearOperator, j: int, col: Vec) -> Mat:
    """Column j sits on the boundary but is not a vertex: slide it inside its
    face. u is orthogonal to every active facet functional, and the step keeps
    all inactive facet slacks nonnegative."""
    ball = unit_ball(T.codomain)
    signed = ball.signed_facets()
    active = [f for f in signed if dot(f, col) == 1]
    u = null_space_vector(active, T.codomain.dim)
    assert u is not None  # non-vertex: active functionals cannot span
    t = None
    for f in signed:
        s = dot(f, u)
        if s != 0:
            slack = 1 - dot(f, col)
            assert slack > 0  # active facets have f.u = 0
            step = slack / abs(s)
            t = step if t is None else min(t, step)
    assert t is not None and t > 0  # facets span, so some slack constrains u
    return _column_perturbation(T, j, tuple(t * x for x in u))


def unit_row_rule(T: LinearOperator) -> ExtremalityVerdict:
    """l2^n -> linf^n: decided through the adjoint, which lives on an l1
    domain. Extreme exactly when every row has squared Euclidean norm 1; a
    witness for the adjoint transposes back to one for T."""
    if not (T.domain.kind == L2 and T.codomain.kind == LINF and T.domain.dim == T.codomain.dim):
        raise UnsupportedPairError("unit row rule needs l2^n -> linf^n")
    att = _require_norm_one(T)
    dual_verdict = l1_rule(adjoint(T))
    if dual_verdict.is_extreme:
        return ExtremalityVerdict(EXTREME, UNIT_ROW_RULE, None, att)
    D = tuple(zip(*dual_verdict.witness))
    return ExtremalityVerdict(NOT_EXTREME, UNIT_ROW_RULE, _checked_witness(T, D), att)


def perturbation_polytope_constraints(
    T: LinearOperator,
) -> tuple[tuple[tuple[Vec, Fraction], ...], int]:
    """Inequalities carving {D : norm(T+D) <= 1, norm(T-D) <= 1} in the m*n
    entries of D (row-major): four per (extreme point, facet) representative
    pair. All right-hand sides are nonnegative since norm(T) <= 1."""
    m, n = T.codomain.dim, T.domain.dim
    verts = extreme_points(T.domain).representatives
    facets = unit_ball(T.codomain).facets
    constraints: list[tuple[Vec, Fraction]] = []
    for v in verts:
        for f in facets:
            g = tuple(f[i] * v[j] for i in range(m) for j in range(n))
            gneg = vneg(g)
            c = dot(f, T(v))
            constraints.append((g, 1 - c))
            constraints.append((gneg, 1 + c))
            constraints.append((gneg, 1 - c))
            constraints.append((g, 1 + c))
    return tuple(constraints), m * n


def perturbation_oracle(T: LinearOperator) -> ExtremalityVerdict:
    """Maximize and minimize every entry of D over the perturbation polytope;
    T is extreme iff all 2mn optima are 0, and any nonzero optimum's primal
    point is a witness. The sweeps share one warm-started tableau."""
    if not (T.domain.has_polytopal_ball and T.codomain.has_polytopal_ball):
        raise UnsupportedPairError("perturbation oracle needs polytopal balls")
    att = _require_norm_one(T)
    constraints, nvars = perturbation_polytope_constraints(T)
    sweep = ObjectiveSweep(constraints, nvars)
    m, n = T.codomain.dim, T.domain.dim
    zero = Fraction(0)
    for k in range(nvars):
        for sign in (1, -1):
            objective = tuple(
                Fraction(sign) if j == k else zero for j in range(nvars)
            )
            result = sweep.maximize(objective)
            assert result.status == "optimal"  # the perturbation polytope is bounded
            if result.optimum != 0:
                D = tuple(
                    tuple(result.primal_point[i * n + j] for j in range(n))
                    for i in range(m)
                )
                return ExtremalityVerdict(
                    NOT_EXTREME, PERTURBATION_ORACLE, _checked_witness(T, D), att
                )
    return ExtremalityVerdict(EXTREME, PERTURBATION_ORACLE, None, att)


@dataclass(frozen=True)
class AuditCheck:
    name: str
    status: str  # "pass" | "fail" | "not_applicable" | "not_covered"
    detail: str


@dataclass(frozen=True)
class AttainmentAudit:
    checks: tuple[AuditCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


def audit_extreme_verdict(T: LinearOperator, verdict: ExtremalityVerdict) -> AttainmentAudit:
    """Audit an extreme verdict on a polytopal domain: the attaining extreme
    points must span the domain, and when exactly dim pairs attain, each of
    their images must be an extreme point of the codomain ball. Attaining sets
    larger than the minimum are reported as not covered rather than asserted.
    Refuses non-extreme verdicts."""
    if not verdict.is_extreme:
        raise ValueError("audit applies to extreme verdicts only")
    checks: list[AuditCheck] = []
    if not T.domain.has_polytopal_ball:
        return AttainmentAudit(
            (
                AuditCheck(
                    "span", "not_applicable", "domain ball is not polytopal"
                ),
            )
        )
    att = verdict.evidence
    n = T.domain.dim
    checks.append(
        AuditCheck(
            "span",
            "pass" if att.span_rank == n else "fail",
            f"attaining span rank {att.span_rank} of {n}",
        )
    )
    if len(att.attaining_extremes) != n:
        checks.append(
            AuditCheck(
                "images_extreme",
                "not_covered",
                f"{len(att.attaining_extremes)} attaining pairs exceed the minimal {n}",
            )
        )
    else:
        for v in att.attaining_extremes:
            image = T(v)
            ok = is_extreme_point(T.codomain, image)
            checks.append(
                AuditCheck(
                    "images_extreme",
                    "pass" if ok else "fail",
                    f"image of {v} {'is' if ok else 'is not'} extreme in the codomain ball",
                )
            )
    return AttainmentAudit(tuple(checks))
