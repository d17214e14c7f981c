"""Plumpness of facets and the GL decision for polyhedral spaces.

A facet ``F = Face(x*)`` is plump exactly when ``dist(y, F) = 1 - x*(y)``
for every ``y`` in the ball.  The left side minus the right side is a convex
function of ``y`` that is never negative, so it suffices to test the ball's
vertices.  A finite-dimensional polyhedral space is GL exactly when every
facet is plump; lower-dimensional faces never need testing because a
relative-interior point of a facet lies in no other face.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple, Optional

from .errors import InputError, UnsupportedDimension
from .normed_space import DistanceProgram, PolyhedralSpace, norm_eval
from .polytope import (Facet, GeneralPolytope, contains, difference_body, facets_of,
                       hyperplane_section, volume)
from .rational import ONE, Vector


@dataclass(frozen=True)
class VertexRecord:
    vertex: Vector
    distance: Fraction
    bound: Fraction  # 1 - x*(y)
    minimizer: Vector

    @property
    def excess(self) -> Fraction:
        return self.distance - self.bound

    def __neg__(self) -> "VertexRecord":
        return VertexRecord(-self.vertex, self.distance, self.bound, -self.minimizer)


@dataclass(frozen=True)
class PlumpnessReport:
    facet: Facet
    plump: bool
    records: tuple[VertexRecord, ...]
    witness: Optional[VertexRecord] = None

    def mirrored(self) -> "PlumpnessReport":
        """Report for ``-F``: ``dist(y, -F) = dist(-y, F)``."""
        by_vertex = {r.vertex: r for r in self.records}
        records = tuple(-by_vertex[-r.vertex] for r in self.records)
        witness = -self.witness if self.witness is not None else None
        return PlumpnessReport(-self.facet, self.plump, records, witness)


@dataclass(frozen=True)
class GlVerdict:
    space: PolyhedralSpace
    is_gl: bool
    reports: tuple[PlumpnessReport, ...]

    @property
    def plump_facets(self) -> list[Facet]:
        return [r.facet for r in self.reports if r.plump]

    @property
    def non_plump(self) -> list[PlumpnessReport]:
        return [r for r in self.reports if not r.plump]


def _check_facet(X: PolyhedralSpace, F: Facet) -> None:
    if F.dim != X.dim or F.functional not in X.ball.functionals:
        raise InputError(f"{F.functional} is not a facet functional of the ball")
    expected = tuple(sorted(v for v in X.ball.vertices if F.functional.dot(v) == 1))
    if tuple(sorted(F.vertices)) != expected:
        raise InputError("facet vertex list does not match the ball")


def is_plump_facet(X: PolyhedralSpace, F: Facet) -> PlumpnessReport:
    """Exact plumpness verdict with one record per ball vertex."""
    _check_facet(X, F)
    d = F.functional
    program = DistanceProgram(X, F.vertices)
    records = []
    for y in X.ball.vertices:
        s = d.dot(y)
        if s == 1:
            records.append(VertexRecord(y, Fraction(0), Fraction(0), y))
        elif s == -1:
            # ||y - a|| <= 2 for a = -y in F, and >= x*(a - y) = 2
            records.append(VertexRecord(y, Fraction(2), Fraction(2), -y))
        else:
            dist, a = program.solve(y)
            records.append(VertexRecord(y, dist, ONE - s, a))
    worst = max(records, key=lambda r: r.excess)
    plump = worst.excess == 0
    return PlumpnessReport(F, plump, tuple(records), None if plump else worst)


def _report(args):
    X, F = args
    return is_plump_facet(X, F)


def is_gl(X: PolyhedralSpace, parallel: bool = False) -> GlVerdict:
    """GL verdict: every facet plump.  ``F`` and ``-F`` share a verdict, so
    only one facet per antipodal pair is solved."""
    facets = facets_of(X.ball)
    reps = facets[0::2]
    if parallel and len(reps) > 1:
        with ProcessPoolExecutor() as pool:
            half = list(pool.map(_report, [(X, F) for F in reps]))
    else:
        half = [is_plump_facet(X, F) for F in reps]
    reports = []
    for r in half:
        reports.append(r)
        reports.append(r.mirrored())
    return GlVerdict(X, all(r.plump for r in half), tuple(reports))


def plumpness_witnesses(X: PolyhedralSpace, F: Facet, y) -> tuple[Vector, Vector, Fraction]:
    """Points ``u, v`` of ``F`` nearest to ``y`` and ``-y`` with the sum
    ``||y - u|| + ||y + v||``; a plump facet keeps the sum at most 2."""
    y = Vector(y)
    program = DistanceProgram(X, F.vertices)
    du, u = program.solve(y)
    dv, v = program.solve(-y)
    return u, v, norm_eval(X, y - u) + norm_eval(X, y + v)


def difference_body_check(X: PolyhedralSpace, F: Facet,
                          report: PlumpnessReport | None = None) -> Optional[bool]:
    """Whether ``F - F`` contains the central section ``B ∩ ker x*``.

    Returns None (skipped) for non-plump facets, where nothing is claimed.
    """
    if report is None:
        report = is_plump_facet(X, F)
    if not report.plump:
        return None
    return contains(difference_body(F.polytope()), hyperplane_section(X.ball, F.functional))


class RogersShephard(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    ok: bool


def rogers_shephard_audit(K) -> RogersShephard:
    """``vol(K - K)`` against ``C(2m, m) vol(K)`` in the affine hull of ``K``."""
    if not isinstance(K, GeneralPolytope):
        K = K.as_general()
    m = K.affine_dim
    if m > 3:
        raise UnsupportedDimension(f"Rogers-Shephard audit supports m <= 3, got {m}")
    lhs = volume(difference_body(K))
    rhs = comb(2 * m, m) * volume(K)
    return RogersShephard(lhs, rhs, lhs <= rhs)
