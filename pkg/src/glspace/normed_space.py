"""Polyhedral normed spaces: norms, faces, and exact distances."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import DimensionError, FunctionalNotNorming
from .lp import LpProblem, Status, solve_lp
from .polytope import GeneralPolytope, SymmetricPolytope, polar_dual
from .rational import ONE, ZERO, Vector


@dataclass(frozen=True)
class PolyhedralSpace:
    """``R^n`` normed by the Minkowski functional of a symmetric polytope."""

    ball: SymmetricPolytope

    @property
    def dim(self) -> int:
        return self.ball.dim

    @cached_property
    def dual_ball(self) -> SymmetricPolytope:
        return polar_dual(self.ball)

    def norm(self, x) -> Fraction:
        return norm_eval(self, x)

    def dual_norm(self, f) -> Fraction:
        f = _vec(f, self.dim)
        return max(abs(f.dot(v)) for v in self.ball.vertices)


def _vec(x, dim: int) -> Vector:
    v = x if isinstance(x, Vector) else Vector(x)
    if len(v) != dim:
        raise DimensionError(f"vector of dimension {len(v)} in a {dim}-dimensional space")
    return v


def norm_eval(X: PolyhedralSpace, x) -> Fraction:
    x = _vec(x, X.dim)
    return max(abs(d.dot(x)) for d in X.ball.functionals)


class DistanceProgram:
    """``y -> dist(y, conv(points))`` as a reusable LP skeleton.

    Variables are barycentric weights ``l_1..l_k`` and the bound ``t``; each
    facet functional ``d`` of the ball contributes ``d.(y - sum l_i a_i) <= t``.
    """

    def __init__(self, X: PolyhedralSpace, points: Sequence[Vector]):
        self.space = X
        self.points = [_vec(p, X.dim) for p in points]
        k = len(self.points)
        self._funcs = X.ball.functionals
        rows = []
        for d in self._funcs:
            rows.append(Vector._raw(tuple(-d.dot(a) for a in self.points) + (-ONE,)))
        self._rows = rows
        sign = []
        for i in range(k):
            sign.append((Vector._raw(tuple(-ONE if j == i else ZERO for j in range(k + 1))), ZERO))
        self._sign = tuple(sign)
        self._eq = ((Vector._raw((ONE,) * k + (ZERO,)), ONE),)
        self._objective = Vector._raw((ZERO,) * k + (ONE,))

    def solve(self, y) -> tuple[Fraction, Vector]:
        y = _vec(y, self.space.dim)
        if len(self.points) == 1:
            a = self.points[0]
            return norm_eval(self.space, y - a), a
        ub = tuple((row, -d.dot(y)) for row, d in zip(self._rows, self._funcs)) + self._sign
        out = solve_lp(LpProblem(self._objective, ub, self._eq))
        if out.status is not Status.OPTIMAL:
            raise AssertionError(f"distance program returned {out.status}")
        lam = out.point[:-1]
        a = Vector.zero(self.space.dim)
        for w, p in zip(lam, self.points):
            if w:
                a = a + p * w
        return out.optimum, a


def _points(A) -> list[Vector]:
    if isinstance(A, (GeneralPolytope, SymmetricPolytope)):
        return list(A.vertices)
    if hasattr(A, "vertices"):
        return list(A.vertices)
    return [a if isinstance(a, Vector) else Vector(a) for a in A]


def dist_point_to_polytope(X: PolyhedralSpace, y, A) -> tuple[Fraction, Vector]:
    """Exact ``min ||y - a||`` over ``a`` in ``conv(A)`` and a minimizer."""
    pts = _points(A)
    if not pts:
        raise ValueError("empty polytope")
    return DistanceProgram(X, pts).solve(y)


def hausdorff_distance(X: PolyhedralSpace, A, B) -> Fraction:
    """Hausdorff distance between two polytopes given by vertices.

    ``dist(., C)`` is convex for convex ``C``, so its maximum over ``conv(A)``
    is attained at a vertex of ``A``.
    """
    pa, pb = _points(A), _points(B)
    if len(pa[0]) != len(pb[0]):
        raise DimensionError("dimension mismatch")
    to_b = DistanceProgram(X, pb)
    to_a = DistanceProgram(X, pa)
    return max(max(to_b.solve(a)[0] for a in pa), max(to_a.solve(b)[0] for b in pb))


def face_of_functional(X: PolyhedralSpace, d) -> GeneralPolytope:
    """``Face(d) = {x in B : d.x = 1}`` for a norm-one functional ``d``."""
    d = _vec(d, X.dim)
    if X.dual_norm(d) != 1:
        raise FunctionalNotNorming(f"functional {d} has dual norm {X.dual_norm(d)}")
    return GeneralPolytope((v for v in X.ball.vertices if d.dot(v) == 1), X.dim, extreme=True)
