"""Exact rational geometry of operator unit balls.

Decide whether a linear operator between small finite-dimensional normed
spaces is an extreme point of the operator unit ball, enumerate all extreme
contractions for polytopal pairs, and check the vertex-preservation (L-P)
property of a pair of spaces. Every decision path is exact: scalars are
rationals, Euclidean quantities are handled as squares, and verdicts carry
checkable witnesses.
"""

from .linalg import (
    DimensionMismatchError,
    LinearSolution,
    Mat,
    RationalFormatError,
    Vec,
    format_rational,
    mat,
    parse_rational,
    rank,
    solve_linear,
    vec,
)
from .lp import (
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    CertificateError,
    LinearProgram,
    LPResult,
    solve,
    verify_result,
)
from .polytopes import (
    NotFullDimensionalError,
    SymmetricPolytope,
    from_facets,
    from_vertices,
    to_facets,
    to_vertices,
)
from .spaces import (
    ExtremeSet,
    InfiniteExtremeSetError,
    NormValue,
    NormedSpace,
    UnsupportedSpaceError,
    cross_polytope,
    cube,
    dual,
    extreme_points,
    gauge_norm_vrep,
    hexagon_space,
    is_extreme_point,
    l1_space,
    l2_space,
    linf_space,
    norm,
    polytopal_space,
    space_from_vertices,
    unit_ball,
)
from .operators import (
    LinearOperator,
    NormAttainment,
    UnsupportedPairError,
    adjoint,
    attainment,
    compose,
    op_norm,
    operator,
)
from .extremality import (
    EXTREME,
    NOT_EXTREME,
    AttainmentAudit,
    ExtremalityVerdict,
    NotContractionBoundaryError,
    audit_extreme_verdict,
    decide,
    l1_rule,
    perturbation_oracle,
    rank_test,
    unit_row_rule,
)
from .enumeration import (
    CompositionClosureReport,
    ExtremeContractionSet,
    LPPropertyReport,
    SizeCapError,
    check_lp_property,
    composition_closure,
    enumerate_extreme_contractions,
    enumerate_l1,
    enumerate_operator_ball,
    find_forward_violation,
    operator_ball,
)

__all__ = [name for name in dir() if not name.startswith("_")]
