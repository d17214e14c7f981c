"""Absolute norms, E-sums of polyhedral spaces and the GL-monotone test.

An absolute norm ``E`` on ``R^n`` has unit coordinate vectors and is
invariant under coordinate sign flips.  The E-sum of spaces ``X_1..X_n`` is
normed by ``||(x_1..x_n)|| = ||(||x_1||, .., ||x_n||)||_E``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .dd import polyhedron_vertices
from .errors import (DimensionError, InputError, NotAbsolute, PreconditionError,
                     TheoremViolation, UnsupportedDimension)
from .gl_analysis import GlVerdict, is_gl, is_plump_facet
from .lp import feasible
from .normed_space import PolyhedralSpace, norm_eval
from .polytope import Facet, SymmetricPolytope, facets_of, from_halfspaces
from .rational import ONE, ZERO, Vector

MAX_OUTER_DIM = 3
MAX_COMPONENT_DIM = 2
MAX_SUM_DIM = 4
PROBES = 20


def _flip(v: Vector, k: int) -> Vector:
    return Vector._raw(tuple(-x if i == k else x for i, x in enumerate(v)))


@dataclass(frozen=True)
class AbsoluteNormSpace:
    space: PolyhedralSpace

    @property
    def n(self) -> int:
        return self.space.dim

    @property
    def ball(self) -> SymmetricPolytope:
        return self.space.ball

    def nonnegative_functionals(self) -> list[Vector]:
        """Extreme dual points with every coordinate ``>= 0``."""
        return [d for d in self.ball.functionals if all(x >= 0 for x in d)]


def _monotone_probe(X: PolyhedralSpace, rng: random.Random) -> Optional[tuple[Vector, Vector]]:
    n = X.dim
    b = Vector._raw(tuple(Fraction(rng.randint(0, 16), 16) for _ in range(n)))
    a = Vector._raw(tuple(x * Fraction(rng.randint(0, 8), 8) for x in b))
    if norm_eval(X, a) > norm_eval(X, b):
        return a, b
    return None


def validate_absolute(P, probes: int = PROBES, seed: int = 0) -> AbsoluteNormSpace:
    """Check unit basis vectors, flip closure and monotonicity probes."""
    X = P if isinstance(P, PolyhedralSpace) else PolyhedralSpace(P)
    n = X.dim
    for k in range(n):
        e = Vector.unit(n, k)
        if norm_eval(X, e) != 1:
            raise NotAbsolute(f"basis vector {e} has norm {norm_eval(X, e)}")
    verts = set(X.ball.vertices)
    funcs = set(X.ball.functionals)
    for k in range(n):
        for v in X.ball.vertices:
            if _flip(v, k) not in verts:
                raise NotAbsolute(f"flipping coordinate {k + 1} sends vertex {v} outside the ball")
        for d in X.ball.functionals:
            if _flip(d, k) not in funcs:
                raise NotAbsolute(f"flipping coordinate {k + 1} breaks facet {d}")
    rng = random.Random(seed)
    for _ in range(probes):
        bad = _monotone_probe(X, rng)
        if bad is not None:
            raise NotAbsolute(f"norm not monotone: {bad[0]} <= {bad[1]}")
    return AbsoluteNormSpace(X)


# --------------------------------------------------------------------------
# monotone plumpness


@dataclass(frozen=True)
class GlmResult:
    functional: Vector
    support: tuple[int, ...]
    prefilter: bool
    monotone_plump: bool
    counterexample: Optional[tuple[Vector, Vector]] = None
    certificate: Optional[Vector] = None
    vertices_checked: int = 0

    @property
    def consistent(self) -> bool:
        """A prefilter failure must come with a concrete infeasible ``(a, z)``
        whenever the full procedure was run."""
        if self.prefilter or self.vertices_checked == 0:
            return True
        return not self.monotone_plump and self.counterexample is not None


@dataclass(frozen=True)
class GlmVerdict:
    space: AbsoluteNormSpace
    results: tuple[GlmResult, ...]

    @property
    def is_glm(self) -> bool:
        return all(r.monotone_plump for r in self.results)

    @property
    def failures(self) -> list[GlmResult]:
        return [r for r in self.results if not r.monotone_plump]


def _reduce_functional(E: AbsoluteNormSpace, d) -> Vector:
    d = d if isinstance(d, Vector) else Vector(d)
    if len(d) != E.n:
        raise DimensionError(f"functional of dimension {len(d)} for n = {E.n}")
    if d not in E.ball.functionals:
        raise InputError(f"{d} is not an extreme point of the dual ball")
    return d.abs()


def b_system(E: AbsoluteNormSpace, d: Vector, face: Sequence[Vector], a: Vector, z: Vector):
    """Feasibility of: ``b`` in the ball with ``d.b = 1``, ``b_k >= a_k`` on the
    support of ``d``, and ``b - z`` a nonnegative combination of the points of
    ``Face(d)`` (which is ``||b - z|| = d.(b - z) = 1 - d.z``).

    Variables are ``b`` (free) followed by one weight per face point.
    """
    n, m = E.n, len(face)
    zeros_m = (ZERO,) * m
    ineq = []
    for h in E.ball.functionals:
        ineq.append((Vector._raw(tuple(h) + zeros_m), ONE))
    for k in range(n):
        if d[k] != 0:
            row = [ZERO] * (n + m)
            row[k] = -ONE
            ineq.append((Vector._raw(tuple(row)), -a[k]))
    for i in range(m):
        row = [ZERO] * (n + m)
        row[n + i] = -ONE
        ineq.append((Vector._raw(tuple(row)), ZERO))
    eq = [(Vector._raw(tuple(d) + zeros_m), ONE)]
    for k in range(n):
        row = [ZERO] * (n + m)
        row[k] = ONE
        for i, f in enumerate(face):
            row[n + i] = -f[k]
        eq.append((Vector._raw(tuple(row)), z[k]))
    return feasible(ineq, eq, n + m)


def parameter_vertices(E: AbsoluteNormSpace, d: Vector, g: Vector) -> list[tuple[Vector, Vector]]:
    """Vertices of ``{(a, z) : g.a = 1, a >= 0, a and z in the ball,
    0 <= z_k <= a_k on the support of d}``."""
    n = E.n
    zero_n = (ZERO,) * n
    ineq = []
    for h in E.ball.functionals:
        ineq.append((tuple(h) + zero_n, ONE))
        ineq.append((zero_n + tuple(h), ONE))
    for k in range(n):
        row = [ZERO] * (2 * n)
        row[k] = -ONE
        ineq.append((tuple(row), ZERO))
        if d[k] != 0:
            row = [ZERO] * (2 * n)
            row[n + k] = -ONE
            ineq.append((tuple(row), ZERO))
            row = [ZERO] * (2 * n)
            row[n + k] = ONE
            row[k] = -ONE
            ineq.append((tuple(row), ZERO))
    eq = [(tuple(g) + zero_n, ONE)]
    return [(Vector._raw(v[:n]), Vector._raw(v[n:])) for v in polyhedron_vertices(ineq, eq)]


def is_monotone_plump(E: AbsoluteNormSpace, d, audit: bool = False) -> GlmResult:
    """Decide whether ``Face(d)`` is monotone plump.

    The coordinate prefilter (entries of ``|d|`` in ``{0, 1}``) is a
    certified negative.  Otherwise, and always in audit mode, the
    quantifier over ``(a, z)`` is reduced to vertices of one parameter
    polytope per nonnegative facet: the admissible ``(a, z)`` form a
    projection of a polyhedron, hence a convex set.  A nonnegative sphere
    point always lies on a facet with nonnegative functional because
    ``|g|.a >= g.a`` and ``|g|`` is a facet functional too.
    """
    d = _reduce_functional(E, d)
    support = tuple(k for k, x in enumerate(d) if x != 0)
    prefilter = all(x in (0, 1) for x in d)
    if not prefilter and not audit:
        return GlmResult(d, support, False, False)
    face = [v for v in E.ball.vertices if d.dot(v) == 1]
    checked = 0
    for g in E.nonnegative_functionals():
        for a, z in parameter_vertices(E, d, g):
            checked += 1
            out = b_system(E, d, face, a, z)
            if not out.feasible:
                return GlmResult(d, support, prefilter, False, (a, z), out.certificate, checked)
    if not prefilter:
        raise TheoremViolation(f"functional {d} fails the coordinate test but passes the full procedure")
    return GlmResult(d, support, prefilter, True, None, None, checked)


def is_glm(E: AbsoluteNormSpace, audit: bool = False) -> GlmVerdict:
    return GlmVerdict(E, tuple(is_monotone_plump(E, d, audit) for d in E.nonnegative_functionals()))


def is_gl_respecting(E: AbsoluteNormSpace) -> bool:
    """GL-respecting and GL-monotone coincide for absolute norms."""
    return is_glm(E).is_glm


def extended_z_probe(E: AbsoluteNormSpace, d, samples: int = 20, seed: int = 0) -> bool:
    """Sample ``a`` on the nonnegative sphere and ``z`` in the ball with
    ``|z_k| <= a_k`` on the support, and check the ``b`` system is feasible."""
    d = _reduce_functional(E, d)
    face = [v for v in E.ball.vertices if d.dot(v) == 1]
    rng = random.Random(seed)
    n = E.n
    done = 0
    while done < samples:
        raw = Vector._raw(tuple(Fraction(rng.randint(0, 16), 16) for _ in range(n)))
        if raw.is_zero():
            continue
        a = raw / norm_eval(E.space, raw)
        zc = []
        for k in range(n):
            if d[k] != 0:
                zc.append(a[k] * Fraction(rng.randint(-8, 8), 8))
            else:
                zc.append(Fraction(rng.randint(-16, 16), 16))
        z = Vector._raw(tuple(zc))
        nz = norm_eval(E.space, z)
        if nz > 1:
            z = z / nz  # scaling keeps |z_k| <= a_k
        done += 1
        if not b_system(E, d, face, a, z).feasible:
            return False
    return True


# --------------------------------------------------------------------------
# E-sums


@dataclass(frozen=True)
class SumSpace:
    outer: AbsoluteNormSpace
    components: tuple[PolyhedralSpace, ...]
    ball: SymmetricPolytope
    dims: tuple[int, ...] = field(default=())

    @property
    def space(self) -> PolyhedralSpace:
        return PolyhedralSpace(self.ball)

    def split(self, x) -> list[Vector]:
        x = Vector(x)
        out, i = [], 0
        for m in self.dims:
            out.append(x[i:i + m])
            i += m
        return [Vector._raw(p) for p in out]

    def component_norms(self, x) -> Vector:
        return Vector._raw(tuple(norm_eval(X, p) for X, p in zip(self.components, self.split(x))))

    def composite_norm(self, x) -> Fraction:
        return norm_eval(self.outer.space, self.component_norms(x))


def _check_limits(E: AbsoluteNormSpace, components: Sequence[PolyhedralSpace]) -> None:
    if len(components) != E.n:
        raise DimensionError(f"{len(components)} components for an outer norm on R^{E.n}")
    if E.n > MAX_OUTER_DIM:
        raise UnsupportedDimension(f"outer dimension {E.n} exceeds {MAX_OUTER_DIM}")
    for X in components:
        if X.dim > MAX_COMPONENT_DIM:
            raise UnsupportedDimension(f"component dimension {X.dim} exceeds {MAX_COMPONENT_DIM}")
    total = sum(X.dim for X in components)
    if total > MAX_SUM_DIM:
        raise UnsupportedDimension(f"sum dimension {total} exceeds {MAX_SUM_DIM}")


def sum_functionals(E: AbsoluteNormSpace, components: Sequence[PolyhedralSpace]) -> list[Vector]:
    """``(d_1 g_1, .., d_n g_n)`` over nonnegative extreme ``d`` and dual
    vertices ``g_k`` of the components."""
    out = set()
    for d in E.nonnegative_functionals():
        choices = [X.ball.functionals if d[k] != 0 else (Vector.zero(X.dim),)
                   for k, X in enumerate(components)]
        for gs in itertools.product(*choices):
            coords = []
            for dk, g in zip(d, gs):
                coords.extend(dk * x for x in g)
            out.add(Vector._raw(tuple(coords)))
    return sorted(out)


def build_e_sum(E: AbsoluteNormSpace, components: Sequence, probes: int = PROBES,
                seed: int = 0) -> SumSpace:
    components = tuple(X if isinstance(X, PolyhedralSpace) else PolyhedralSpace(X)
                       for X in components)
    _check_limits(E, components)
    total = sum(X.dim for X in components)
    ball = from_halfspaces(total, sum_functionals(E, components))
    S = SumSpace(E, components, ball, tuple(X.dim for X in components))
    rng = random.Random(seed)
    for _ in range(probes):
        x = Vector._raw(tuple(Fraction(rng.randint(-16, 16), rng.randint(1, 8)) for _ in range(total)))
        if norm_eval(S.space, x) != S.composite_norm(x):
            raise TheoremViolation(f"sum norm disagrees with the composite norm at {x}")
    return S


def compose_sum_face(E: AbsoluteNormSpace, components: Sequence, d,
                     component_facets: Sequence[Facet], S: SumSpace | None = None) -> Facet:
    """Facet of the sum generated by ``(d_1 w_1, .., d_n w_n)``, verified plump."""
    components = tuple(X if isinstance(X, PolyhedralSpace) else PolyhedralSpace(X)
                       for X in components)
    if len(component_facets) != len(components):
        raise DimensionError("one facet per component is required")
    res = is_monotone_plump(E, d)
    if not res.monotone_plump:
        raise PreconditionError(f"{res.functional} is not monotone plump")
    for X, F in zip(components, component_facets):
        if not is_plump_facet(X, F).plump:
            raise PreconditionError(f"component facet {F.functional} is not plump")
    if S is None:
        S = build_e_sum(E, components)
    coords = []
    for dk, F in zip(res.functional, component_facets):
        coords.extend(dk * x for x in F.functional)
    w = Vector._raw(tuple(coords))
    facet = next((F for F in facets_of(S.ball) if F.functional == w), None)
    if facet is None:
        raise PreconditionError(f"composite functional {w} does not define a facet of the sum")
    if not is_plump_facet(S.space, facet).plump:
        raise TheoremViolation(f"composite facet {w} is not plump")
    return facet


@dataclass(frozen=True)
class CrossValidation:
    glm: bool
    sum_gl: bool
    agree: bool
    sum_space: SumSpace
    glm_verdict: GlmVerdict
    sum_verdict: GlVerdict


def cross_validate(E: AbsoluteNormSpace, components: Sequence, parallel: bool = False) -> CrossValidation:
    components = tuple(X if isinstance(X, PolyhedralSpace) else PolyhedralSpace(X)
                       for X in components)
    for i, X in enumerate(components):
        if not is_gl(X).is_gl:
            raise PreconditionError(f"component {i + 1} is not a GL-space")
    glm = is_glm(E)
    S = build_e_sum(E, components)
    verdict = is_gl(S.space, parallel=parallel)
    agree = glm.is_glm == verdict.is_gl
    if not agree:
        raise TheoremViolation(
            f"outer norm GL-monotone = {glm.is_glm} but the sum is GL = {verdict.is_gl}")
    return CrossValidation(glm.is_glm, verdict.is_gl, agree, S, glm, verdict)
