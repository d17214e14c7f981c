"""Exact linear programming with verifiable certificates.

Problems are ``minimize c.x`` over free variables subject to ``row.x <= b``
and ``row.x = b``.  The solver runs a dictionary simplex with integer
(fraction-free) pivoting and Bland's rule:

* phase 0 exchanges every free variable into the basis;
* phase 1 uses a single auxiliary variable to reach a feasible basis;
* phase 2 optimizes the objective.

Dual multipliers use the convention ``c + sum(l_i * a_i) + sum(m_j * e_j) = 0``
with ``l >= 0``, so that ``optimum = -(l.b + m.f)``.  An infeasible problem
returns a Farkas ray ``(l, m)`` with ``l >= 0``, ``l.A + m.E = 0`` and
``l.b + m.f < 0``, scaled to a primitive integer vector.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import _backend
from .errors import DimensionError, GlspaceError
from .rational import ZERO, Vector, integer_row, primitive_integer, to_rational


class Status(enum.Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class LpProblem:
    objective: Vector
    inequalities: tuple[tuple[Vector, Fraction], ...] = ()
    equalities: tuple[tuple[Vector, Fraction], ...] = ()

    def __post_init__(self):
        n = len(self.objective)
        for kind in (self.inequalities, self.equalities):
            for row, _ in kind:
                if len(row) != n:
                    raise DimensionError(
                        f"constraint row of length {len(row)} for {n} variables")

    @property
    def n_vars(self) -> int:
        return len(self.objective)

    @classmethod
    def build(cls, objective, inequalities=(), equalities=()) -> "LpProblem":
        """Coerce plain sequences and ints/strings into an LpProblem."""
        return cls(
            Vector(objective),
            tuple((Vector(r), to_rational(b)) for r, b in inequalities),
            tuple((Vector(r), to_rational(b)) for r, b in equalities),
        )


@dataclass(frozen=True)
class LpOutcome:
    status: Status
    optimum: Optional[Fraction] = None
    point: Optional[Vector] = None
    certificate: Optional[Vector] = None

    @property
    def feasible(self) -> bool:
        return self.status is not Status.INFEASIBLE


class SolverError(GlspaceError):
    """Internal inconsistency in the simplex (should never happen)."""


def solve_lp(problem: LpProblem) -> LpOutcome:
    return _Simplex(problem).run()


def feasible(inequalities=(), equalities=(), n_vars=None) -> LpOutcome:
    """Feasibility-only solve: the objective is identically zero."""
    if n_vars is None:
        first = next(iter(inequalities or equalities))
        n_vars = len(first[0])
    return solve_lp(LpProblem(Vector.zero(n_vars), tuple(inequalities), tuple(equalities)))


class _Simplex:
    def __init__(self, problem: LpProblem):
        self.problem = problem
        n = self.n = problem.n_vars
        # (row, bound, original index, sign): equalities become two inequalities
        rows: list[tuple[Vector, Fraction, int, int]] = []
        for i, (a, b) in enumerate(problem.inequalities):
            rows.append((a, b, i, 1))
        n_ub = len(problem.inequalities)
        for j, (e, f) in enumerate(problem.equalities):
            rows.append((e, f, n_ub + j, 1))
            rows.append((-e, -f, n_ub + j, -1))
        self.rows = rows
        m = self.m = len(rows)

        # tableau row i: s_i * u_i = s_i*b_i - s_i*a_i.x ; column 0 is constant
        T = []
        self.row_scale = []
        for a, b, _, _ in rows:
            ints, scale = integer_row([b, *a])
            T.append([ints[0]] + [-x for x in ints[1:]])
            self.row_scale.append(scale)
        zints, self.obj_scale = integer_row([ZERO, *problem.objective])
        T.append(zints)
        self.T = T
        self.det = 1
        self.basic = [n + i for i in range(m)]       # var id per constraint row
        self.nonbasic = [-1] + list(range(n))        # var id per column, col 0 const
        self.obj_rows = [m]                          # indices of objective rows
        self.x0_id = n + m

    # -- helpers -------------------------------------------------------------
    def _pivot(self, r: int, s: int) -> None:
        self.det = _backend.kernel.pivot(self.T, r, s, self.det)
        self.basic[r], self.nonbasic[s] = self.nonbasic[s], self.basic[r]

    def _constrained_rows(self) -> list:
        n = self.n
        nrows = len(self.basic)
        return [self.basic[i] >= n for i in range(nrows)]

    def _constrained_cols(self) -> list:
        n = self.n
        return [j > 0 and v >= n for j, v in enumerate(self.nonbasic)]

    def _bland(self, obj_index: int) -> bool:
        """Run Bland's rule on the given objective row; False if unbounded."""
        kernel = _backend.kernel
        T = self.T
        while True:
            col_ok = self._constrained_cols()
            s = kernel.bland_entering(T[obj_index], col_ok, self.nonbasic)
            if s < 0:
                return True
            r = kernel.bland_leaving(T, s, self._constrained_rows(), self.basic)
            if r < 0:
                return False
            self._pivot(r, s)

    # -- phases ----------------------------------------------------------------
    def run(self) -> LpOutcome:
        n, T = self.n, self.T
        nrows = self.m

        # phase 0: free variables into the basis
        for k in range(n):
            s = self.nonbasic.index(k)
            cand = [i for i in range(nrows) if self.basic[i] >= n and T[i][s] != 0]
            if cand:
                r = min(cand, key=lambda i: self.basic[i])
                self._pivot(r, s)

        rows_ok = self._constrained_rows()
        negative = [i for i in range(len(self.basic)) if rows_ok[i] and T[i][0] < 0]
        if negative:
            outcome = self._phase_one(negative)
            if outcome is not None:
                return outcome

        # phase 2
        obj = T[self.obj_rows[0]]
        for j, v in enumerate(self.nonbasic):
            if j > 0 and v < n and obj[j] != 0:
                return LpOutcome(Status.UNBOUNDED)
        if not self._bland(self.obj_rows[0]):
            return LpOutcome(Status.UNBOUNDED)
        return self._optimal()

    def _phase_one(self, negative) -> Optional[LpOutcome]:
        T, n = self.T, self.n
        det = self.det
        rows_ok = self._constrained_rows()
        for i, row in enumerate(T[: len(self.basic)]):
            row.append(det if rows_ok[i] else 0)
        for k in self.obj_rows:
            T[k].append(0)
        w = [0] * len(T[0])
        w[-1] = det
        T.append(w)
        self.obj_rows.append(len(T) - 1)
        self.nonbasic.append(self.x0_id)
        s = len(self.nonbasic) - 1

        # most negative constant; tie on least basic id
        worst = min(T[i][0] for i in negative)
        r = min((i for i in negative if T[i][0] == worst), key=lambda i: self.basic[i])
        self._pivot(r, s)
        w_index = self.obj_rows[1]
        if not self._bland(w_index):
            raise SolverError("phase one reported unbounded")
        if T[w_index][0] > 0:
            return self._infeasible(w_index)

        # drive x0 out of the basis, then drop it
        if self.x0_id in self.basic:
            r = self.basic.index(self.x0_id)
            cols = [j for j, v in enumerate(self.nonbasic)
                    if j > 0 and v >= n and v != self.x0_id and T[r][j] != 0]
            if cols:
                self._pivot(r, min(cols, key=lambda j: self.nonbasic[j]))
            else:
                del T[r]
                del self.basic[r]
                self.obj_rows = [k - 1 for k in self.obj_rows]
                w_index -= 1
        c = self.nonbasic.index(self.x0_id)
        for row in T:
            del row[c]
        del self.nonbasic[c]
        del T[w_index]
        self.obj_rows.remove(w_index)
        return None

    # -- extraction ----------------------------------------------------------
    def _multipliers(self, obj_row, scale) -> list[Fraction]:
        """Per original constraint row multipliers from reduced costs."""
        n, det = self.n, self.det
        per_row = [ZERO] * self.m
        for j, v in enumerate(self.nonbasic):
            if j > 0 and n <= v < n + self.m:
                i = v - n
                per_row[i] = Fraction(obj_row[j] * self.row_scale[i], det * scale)
        n_ub = len(self.problem.inequalities)
        out = [ZERO] * (n_ub + len(self.problem.equalities))
        for i, (_, _, orig, sign) in enumerate(self.rows):
            out[orig] += sign * per_row[i]
        return out

    def _infeasible(self, w_index: int) -> LpOutcome:
        ray = self._multipliers(self.T[w_index], 1)
        if all(x == 0 for x in ray):
            raise SolverError("empty Farkas ray")
        return LpOutcome(Status.INFEASIBLE, certificate=Vector(primitive_integer(ray)))

    def _optimal(self) -> LpOutcome:
        T, n, det = self.T, self.n, self.det
        x = [ZERO] * n
        for i, v in enumerate(self.basic):
            if v < n:
                x[v] = Fraction(T[i][0], det)
        obj = T[self.obj_rows[0]]
        optimum = Fraction(obj[0], det * self.obj_scale)
        duals = self._multipliers(obj, self.obj_scale)
        return LpOutcome(Status.OPTIMAL, optimum, Vector._raw(tuple(x)), Vector._raw(tuple(duals)))


def verify_outcome(problem: LpProblem, outcome: LpOutcome) -> bool:
    """Check an outcome's certificates exactly; raises SolverError on failure."""
    ub, eq = problem.inequalities, problem.equalities
    n = problem.n_vars
    if outcome.status is Status.OPTIMAL:
        x = outcome.point
        for a, b in ub:
            if a.dot(x) > b:
                raise SolverError("primal point violates an inequality")
        for e, f in eq:
            if e.dot(x) != f:
                raise SolverError("primal point violates an equality")
        if problem.objective.dot(x) != outcome.optimum:
            raise SolverError("objective value mismatch")
        lam = outcome.certificate
        if any(l < 0 for l in lam[: len(ub)]):
            raise SolverError("negative inequality multiplier")
        rows = [a for a, _ in ub] + [e for e, _ in eq]
        bounds = [b for _, b in ub] + [f for _, f in eq]
        for k in range(n):
            if problem.objective[k] + sum((l * r[k] for l, r in zip(lam, rows)), ZERO) != 0:
                raise SolverError("dual stationarity fails")
        if -sum((l * b for l, b in zip(lam, bounds)), ZERO) != outcome.optimum:
            raise SolverError("duality gap")
        return True
    if outcome.status is Status.INFEASIBLE:
        lam = outcome.certificate
        if any(l < 0 for l in lam[: len(ub)]):
            raise SolverError("negative Farkas multiplier")
        rows = [a for a, _ in ub] + [e for e, _ in eq]
        bounds = [b for _, b in ub] + [f for _, f in eq]
        for k in range(n):
            if sum((l * r[k] for l, r in zip(lam, rows)), ZERO) != 0:
                raise SolverError("Farkas combination not zero")
        if sum((l * b for l, b in zip(lam, bounds)), ZERO) >= 0:
            raise SolverError("Farkas bound not negative")
        return True
    return True
