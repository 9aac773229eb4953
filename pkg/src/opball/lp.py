"""Exact simplex solver with verifiable optimality and infeasibility certificates.

Problems are stated over free variables as: maximize c.x subject to a_i.x <= b_i.
Internally each free variable is split into a difference of nonnegatives and a
two-phase tableau simplex runs with Bland's anti-cycling rule, so termination
is guaranteed even on the highly degenerate polytopes that operator unit balls
produce. The tableau runs on gmpy2.mpq for speed; inputs and outputs are
fractions.Fraction.

Every result carries a certificate that is checked by direct substitution into
the original data before it is returned:

  optimal    lambda >= 0 with sum(lambda_i a_i) = c and sum(lambda_i b_i) = optimum
  infeasible lambda >= 0 with sum(lambda_i a_i) = 0 and sum(lambda_i b_i) < 0
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from gmpy2 import mpq

from .linalg import DimensionMismatchError, Vec

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"

_ZERO = mpq(0)
_ONE = mpq(1)


def _to_fraction(q) -> Fraction:
    # Fraction(mpq) would keep mpz components inside the Fraction, which
    # gmpy2 then refuses to convert back; build from plain ints instead.
    return Fraction(int(q.numerator), int(q.denominator))


class CertificateError(AssertionError):
    """A solver certificate failed direct substitution."""


@dataclass(frozen=True)
class LinearProgram:
    """maximize objective.x subject to a.x <= b for each (a, b); x free."""

    objective: Vec
    constraints: tuple[tuple[Vec, Fraction], ...]
    num_vars: int

    def __post_init__(self):
        if len(self.objective) != self.num_vars:
            raise DimensionMismatchError("objective length != num_vars")
        for a, _ in self.constraints:
            if len(a) != self.num_vars:
                raise DimensionMismatchError("constraint length != num_vars")


@dataclass(frozen=True)
class LPResult:
    status: str
    optimum: Fraction | None = None
    primal_point: Vec | None = None
    dual_certificate: tuple[Fraction, ...] | None = None


class _Tableau:
    """Dense tableau over mpq. Columns: n plus-parts, n minus-parts, m slacks,
    then one artificial per originally-negative right-hand side."""

    def __init__(self, constraints: Sequence[tuple[Sequence, object]], num_vars: int):
        self.n = n = num_vars
        self.m = m = len(constraints)
        self.art_cols: list[int] = []
        self.art_rows: list[int] = []
        rows: list[list] = []
        rhs: list = []
        for i, (a, b) in enumerate(constraints):
            b = mpq(b)
            s = _ONE if b >= 0 else mpq(-1)
            arow = [mpq(x) * s for x in a]
            row = arow + [-x for x in arow] + [_ZERO] * m
            row[2 * n + i] = s
            rows.append(row)
            rhs.append(b * s)
            if s < 0:
                self.art_rows.append(i)
        self.real_cols = 2 * n + m
        for i in self.art_rows:
            col = self.real_cols + len(self.art_cols)
            for j, row in enumerate(rows):
                row.append(_ONE if j == i else _ZERO)
            self.art_cols.append(col)
        self.ncols = self.real_cols + len(self.art_cols)
        self.rows = rows
        self.rhs = rhs
        self.basis = []
        art_iter = iter(self.art_cols)
        for i in range(m):
            self.basis.append(next(art_iter) if i in set(self.art_rows) else 2 * n + i)
        self.z: list = [_ZERO] * self.ncols
        self.objval = _ZERO

    def set_objective(self, cost: Sequence) -> None:
        """Install reduced costs for a full-length column cost vector under the
        current basis: z_j = c_j - sum_i c_basis[i] * T[i][j]."""
        z = list(cost)
        obj = _ZERO
        for i, bcol in enumerate(self.basis):
            cb = cost[bcol]
            if cb != 0:
                row = self.rows[i]
                for j in range(self.ncols):
                    if row[j] != 0:
                        z[j] -= cb * row[j]
                obj += cb * self.rhs[i]
        self.z = z
        self.objval = obj

    def _pivot(self, pr: int, pc: int) -> None:
        rows, rhs, z = self.rows, self.rhs, self.z
        prow = rows[pr]
        piv = prow[pc]
        if piv != 1:
            inv = _ONE / piv
            rows[pr] = prow = [x * inv for x in prow]
            rhs[pr] *= inv
        for i in range(self.m):
            if i != pr:
                f = rows[i][pc]
                if f != 0:
                    row = rows[i]
                    rows[i] = [x - f * y for x, y in zip(row, prow)]
                    rhs[i] -= f * rhs[pr]
        f = z[pc]
        if f != 0:
            self.z = [x - f * y for x, y in zip(z, prow)]
            self.objval += f * rhs[pr]
        self.basis[pr] = pc

    def run(self, allowed_cols: int) -> str:
        """Bland's rule simplex over columns [0, allowed_cols). Returns OPTIMAL
        or UNBOUNDED."""
        while True:
            pc = -1
            for j in range(allowed_cols):
                if self.z[j] > 0:
                    pc = j
                    break
            if pc < 0:
                return OPTIMAL
            pr = -1
            best = None
            for i in range(self.m):
                t = self.rows[i][pc]
                if t > 0:
                    ratio = self.rhs[i] / t
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[pr]):
                        best = ratio
                        pr = i
            if pr < 0:
                return UNBOUNDED
            self._pivot(pr, pc)

    def drive_out_artificials(self) -> None:
        for i in range(self.m):
            if self.basis[i] >= self.real_cols:
                for j in range(self.real_cols):
                    if self.rows[i][j] != 0:
                        self._pivot(i, j)
                        break

    def column_value(self, col: int):
        for i, b in enumerate(self.basis):
            if b == col:
                return self.rhs[i]
        return _ZERO

    def primal(self) -> tuple:
        return tuple(
            _to_fraction(self.column_value(j) - self.column_value(self.n + j))
            for j in range(self.n)
        )

    def duals(self) -> tuple:
        return tuple(_to_fraction(-self.z[2 * self.n + i]) for i in range(self.m))


def solve(lp: LinearProgram, verify: bool = True) -> LPResult:
    """Exact optimum with certificates; deterministic for a fixed input."""
    if lp.num_vars == 0 or not lp.constraints:
        return _solve_trivial(lp)
    tab = _Tableau(lp.constraints, lp.num_vars)
    if tab.art_cols:
        cost = [_ZERO] * tab.ncols
        for c in tab.art_cols:
            cost[c] = mpq(-1)
        tab.set_objective(cost)
        status = tab.run(tab.ncols)
        assert status == OPTIMAL  # the artificial objective is bounded by 0
        if tab.objval < 0:
            result = LPResult(INFEASIBLE, dual_certificate=tab.duals())
            if verify:
                verify_result(lp, result)
            return result
        tab.drive_out_artificials()
    cost = [_ZERO] * tab.ncols
    for j, c in enumerate(lp.objective):
        q = mpq(c)
        cost[j] = q
        cost[tab.n + j] = -q
    tab.set_objective(cost)
    status = tab.run(tab.real_cols)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    result = LPResult(
        OPTIMAL,
        optimum=_to_fraction(tab.objval),
        primal_point=tab.primal(),
        dual_certificate=tab.duals(),
    )
    if verify:
        verify_result(lp, result)
    return result


def _solve_trivial(lp: LinearProgram) -> LPResult:
    zero = Fraction(0)
    if lp.constraints:
        # num_vars == 0: every constraint reads 0 <= b.
        for i, (_, b) in enumerate(lp.constraints):
            if b < 0:
                lam = tuple(Fraction(1 if j == i else 0) for j in range(len(lp.constraints)))
                return LPResult(INFEASIBLE, dual_certificate=lam)
        return LPResult(OPTIMAL, zero, (), (zero,) * len(lp.constraints))
    if any(c != 0 for c in lp.objective):
        return LPResult(UNBOUNDED)
    return LPResult(OPTIMAL, zero, (zero,) * lp.num_vars, ())


def verify_result(lp: LinearProgram, result: LPResult) -> None:
    """Check the certificate by substitution into the original data; raises
    CertificateError on any failure. Uses nothing from the solver state."""
    lam = result.dual_certificate
    if result.status == OPTIMAL:
        x = result.primal_point
        if x is None or lam is None or len(x) != lp.num_vars or len(lam) != len(lp.constraints):
            raise CertificateError("optimal result missing or mis-sized witnesses")
        for a, b in lp.constraints:
            if sum(ai * xi for ai, xi in zip(a, x)) > b:
                raise CertificateError("primal point infeasible")
        value = sum(ci * xi for ci, xi in zip(lp.objective, x))
        if value != result.optimum:
            raise CertificateError("objective value mismatch")
        if any(l < 0 for l in lam):
            raise CertificateError("negative dual multiplier")
        for j in range(lp.num_vars):
            if sum(lam[i] * lp.constraints[i][0][j] for i in range(len(lam))) != lp.objective[j]:
                raise CertificateError("dual combination does not reproduce the objective")
        if sum(lam[i] * lp.constraints[i][1] for i in range(len(lam))) != result.optimum:
            raise CertificateError("weak/strong duality gap")
    elif result.status == INFEASIBLE:
        if lam is None or len(lam) != len(lp.constraints):
            raise CertificateError("infeasible result missing witness")
        if any(l < 0 for l in lam):
            raise CertificateError("negative Farkas multiplier")
        for j in range(lp.num_vars):
            if sum(lam[i] * lp.constraints[i][0][j] for i in range(len(lam))) != 0:
                raise CertificateError("Farkas combination is not zero")
        if sum(lam[i] * lp.constraints[i][1] for i in range(len(lam))) >= 0:
            raise CertificateError("Farkas witness has nonnegative rhs combination")


class ObjectiveSweep:
    """Warm-started maximization of many objectives over one fixed system
    a_i.x <= b_i with every b_i >= 0 (so the slack basis is feasible and no
    phase one is needed). The basis is kept between calls, which makes long
    coordinate sweeps over the same polytope cheap."""

    def __init__(self, constraints: Sequence[tuple[Vec, Fraction]], num_vars: int):
        if any(b < 0 for _, b in constraints):
            raise ValueError("ObjectiveSweep needs nonnegative right-hand sides")
        self._constraints = tuple(constraints)
        self._tab = _Tableau(constraints, num_vars)

    def maximize(self, objective: Vec, verify: bool = True) -> LPResult:
        tab = self._tab
        cost = [_ZERO] * tab.ncols
        for j, c in enumerate(objective):
            q = mpq(c)
            cost[j] = q
            cost[tab.n + j] = -q
        tab.set_objective(cost)
        status = tab.run(tab.real_cols)
        if status == UNBOUNDED:
            return LPResult(UNBOUNDED)
        result = LPResult(OPTIMAL, _to_fraction(tab.objval), tab.primal(), tab.duals())
        if verify:
            lp = LinearProgram(objective, self._constraints, len(objective))
            verify_result(lp, result)
        return result
