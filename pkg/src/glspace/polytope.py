"""Exact polytopes: centrally symmetric unit balls and general convex hulls.

A :class:`SymmetricPolytope` keeps both representations.  ``vertices`` are
its extreme points; ``functionals`` are facet normals scaled so that each
facet reads ``d . x <= 1``.  The functionals are the vertices of the polar
body, so polar duality just swaps the two tuples.

A :class:`GeneralPolytope` is the convex hull of finitely many points with
no symmetry or full-dimensionality requirement (faces, sections, difference
bodies).  Volumes and containment are computed inside its affine hull.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

from .dd import polar_vertices
from .errors import DimensionError, GeometryError, InputError, SymmetryError
from .rational import ZERO, Vector, det, rank, rref


def _vectors(dim: int, points: Iterable) -> list[Vector]:
    out = []
    for p in points:
        v = p if isinstance(p, Vector) else Vector(p)
        if len(v) != dim:
            raise DimensionError(f"point {v} is not in dimension {dim}")
        out.append(v)
    return out


def _is_symmetric(points) -> bool:
    s = set(points)
    return all(-p in s for p in s)


def _full_rank_mask(vectors: Sequence[Vector], mask: int, n: int) -> bool:
    chosen = [v for i, v in enumerate(vectors) if mask >> i & 1]
    return len(chosen) >= n and rank(chosen) == n


@dataclass(frozen=True)
class Facet:
    """A facet ``{x in B : functional . x = 1}`` with its vertex list."""

    functional: Vector
    vertices: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.functional)

    def polytope(self) -> "GeneralPolytope":
        return GeneralPolytope(self.vertices, extreme=True)

    def __neg__(self) -> "Facet":
        return Facet(-self.functional, tuple(sorted(-v for v in self.vertices)))


@dataclass(frozen=True)
class SymmetricPolytope:
    """Full-dimensional origin-symmetric polytope with dual V/H data."""

    dim: int
    vertices: tuple[Vector, ...]
    functionals: tuple[Vector, ...]
    canonical: bool = field(default=True, compare=False)

    def __post_init__(self):
        self._validate()

    def _validate(self) -> None:
        n = self.dim
        if not _is_symmetric(self.vertices):
            raise SymmetryError("vertex set is not centrally symmetric")
        if not _is_symmetric(self.functionals):
            raise SymmetryError("facet functionals are not centrally symmetric")
        inc = self.incidence
        for d, mask in zip(self.functionals, inc):
            if not _full_rank_mask(self.vertices, mask, n):
                raise GeometryError(f"functional {d} does not define a facet")
        for i, v in enumerate(self.vertices):
            for d in self.functionals:
                if d.dot(v) > 1:
                    raise GeometryError(f"vertex {v} violates functional {d}")
            vmask = 0
            for k, mask in enumerate(inc):
                if mask >> i & 1:
                    vmask |= 1 << k
            if not _full_rank_mask(self.functionals, vmask, n):
                raise GeometryError(f"point {v} is not a vertex")

    @cached_property
    def incidence(self) -> tuple[int, ...]:
        """Per functional, the bitmask of vertices on its facet."""
        out = []
        for d in self.functionals:
            mask = 0
            for i, v in enumerate(self.vertices):
                if d.dot(v) == 1:
                    mask |= 1 << i
            out.append(mask)
        return tuple(out)

    @cached_property
    def vertex_facets(self) -> tuple[int, ...]:
        """Per vertex, the bitmask of functionals attaining 1 on it."""
        out = [0] * len(self.vertices)
        for k, mask in enumerate(self.incidence):
            for i in range(len(self.vertices)):
                if mask >> i & 1:
                    out[i] |= 1 << k
        return tuple(out)

    def as_general(self) -> "GeneralPolytope":
        return GeneralPolytope(self.vertices, extreme=True)

    def edges(self) -> list[tuple[int, int]]:
        """Index pairs of adjacent vertices."""
        n = self.dim
        vf = self.vertex_facets
        out = []
        for i in range(len(self.vertices)):
            for j in range(i + 1, len(self.vertices)):
                common = vf[i] & vf[j]
                if bin(common).count("1") >= n - 1 and rank(
                        [d for k, d in enumerate(self.functionals) if common >> k & 1]) == n - 1:
                    out.append((i, j))
        return out

    def __str__(self):
        return f"SymmetricPolytope(dim={self.dim}, {len(self.vertices)} vertices, " \
               f"{len(self.functionals)} facets)"


def _build(dim: int, vertices, functionals) -> SymmetricPolytope:
    return SymmetricPolytope(dim, tuple(sorted(vertices)), tuple(sorted(functionals)))


def from_vertices(dim: int, points: Iterable) -> SymmetricPolytope:
    """Symmetric polytope from a V-representation (redundant points allowed)."""
    pts = sorted(set(_vectors(dim, points)))
    if not pts:
        raise InputError("no points")
    try:
        funcs, masks = polar_vertices(pts)
    except GeometryError:
        if not _is_symmetric(pts):
            raise SymmetryError("point set is not centrally symmetric") from None
        raise GeometryError("origin is not an interior point of the hull") from None
    verts = []
    for i, p in enumerate(pts):
        vmask = 0
        for k, mask in enumerate(masks):
            if mask >> i & 1:
                vmask |= 1 << k
        if _full_rank_mask(funcs, vmask, dim):
            verts.append(p)
    if not _is_symmetric(verts):
        raise SymmetryError("convex hull is not centrally symmetric")
    return _build(dim, verts, funcs)


def from_halfspaces(dim: int, rows: Iterable) -> SymmetricPolytope:
    """Symmetric polytope ``{x : d . x <= 1}`` from functionals ``d``."""
    ds = sorted(set(_vectors(dim, rows)))
    if not ds:
        raise InputError("no halfspaces")
    try:
        verts, masks = polar_vertices(ds)
    except GeometryError:
        raise GeometryError("halfspaces define an unbounded set") from None
    tight = [0] * len(ds)
    for j, mask in enumerate(masks):
        for i in range(len(ds)):
            if mask >> i & 1:
                tight[i] |= 1 << j
    funcs = [d for d, t in zip(ds, tight) if _full_rank_mask(verts, t, dim)]
    if not _is_symmetric(funcs):
        raise SymmetryError("halfspace set is not centrally symmetric")
    return _build(dim, verts, funcs)


def polar_dual(P: SymmetricPolytope) -> SymmetricPolytope:
    return SymmetricPolytope(P.dim, P.functionals, P.vertices)


def canonicalize(P: SymmetricPolytope) -> SymmetricPolytope:
    return _build(P.dim, P.vertices, P.functionals)


def _pair_key(d: Vector) -> bool:
    # representative of {d, -d}: first nonzero coordinate positive
    return next(x for x in d if x != 0) > 0


def facets_of(P: SymmetricPolytope) -> list[Facet]:
    """Facets ordered as ``[F1, -F1, F2, -F2, ...]`` by representative."""
    cached = P.__dict__.get("_facets")
    if cached is not None:
        return list(cached)
    by_d = {}
    for d, mask in zip(P.functionals, P.incidence):
        vs = tuple(sorted(v for i, v in enumerate(P.vertices) if mask >> i & 1))
        by_d[d] = Facet(d, vs)
    out = []
    for d in sorted(d for d in P.functionals if _pair_key(d)):
        out.append(by_d[d])
        out.append(by_d[-d])
    P.__dict__["_facets"] = tuple(out)
    return out


# --------------------------------------------------------------------------
# general polytopes


@dataclass
class _Hull:
    origin: Vector
    basis: list            # RREF rows spanning the direction space
    pivots: list[int]
    local: list[Vector]    # extreme points in pivot coordinates
    center: Vector
    normals: list[Vector]  # local facets: normal . (u - center) <= 1
    masks: list[int]       # per facet, bitmask over ``local``


class GeneralPolytope:
    """Convex hull of a finite point set, kept as its extreme points."""

    def __init__(self, points: Iterable, dim: int | None = None, *, extreme: bool = False):
        pts = list(points)
        if not pts:
            raise InputError("empty polytope")
        if dim is None:
            dim = len(pts[0])
        pts = sorted(set(_vectors(dim, pts)))
        self.dim = dim
        self._hull_cache = None
        if extreme or len(pts) <= 2:
            self.vertices = tuple(pts)
        else:
            self.vertices = tuple(pts)
            hull = self._hull()
            self.vertices = tuple(sorted(self._from_local(u) for u in hull.local))

    def __eq__(self, other):
        return isinstance(other, GeneralPolytope) and (self.dim, self.vertices) == (
            other.dim, other.vertices)

    def __hash__(self):
        return hash((self.dim, self.vertices))

    def __repr__(self):
        return "GeneralPolytope([" + ", ".join(map(str, self.vertices)) + "])"

    def __neg__(self) -> "GeneralPolytope":
        return GeneralPolytope((-v for v in self.vertices), self.dim, extreme=True)

    @property
    def affine_dim(self) -> int:
        return len(self._hull().pivots)

    def _local(self, p: Vector, hull: _Hull) -> Vector:
        w = p - hull.origin
        return Vector._raw(tuple(w[k] for k in hull.pivots))

    def _from_local(self, u: Vector) -> Vector:
        hull = self._hull_cache
        x = list(hull.origin)
        for coef, row in zip(u, hull.basis):
            if coef:
                for j, r in enumerate(row):
                    x[j] += coef * r
        return Vector._raw(tuple(x))

    def _hull(self) -> _Hull:
        if self._hull_cache is not None:
            return self._hull_cache
        pts = list(self.vertices)
        p0 = pts[0]
        basis, pivots = rref([p - p0 for p in pts[1:]]) if len(pts) > 1 else ([], [])
        m = len(pivots)
        local = [Vector._raw(tuple((p - p0)[k] for k in pivots)) for p in pts]
        center = Vector._raw(tuple(sum((u[k] for u in local), ZERO) / len(local)
                                   for k in range(m)))
        normals: list[Vector] = []
        if m == 0:
            local = local[:1]
        elif m == 1:
            local = [min(local), max(local)]
            normals = [Vector.of(1 / (u[0] - center[0])) for u in local]
        else:
            normals, pmasks = polar_vertices([u - center for u in local])
            keep = []
            for i in range(len(local)):
                vmask = 0
                for k, mask in enumerate(pmasks):
                    if mask >> i & 1:
                        vmask |= 1 << k
                if _full_rank_mask(normals, vmask, m):
                    keep.append(local[i])
            local = keep
        masks = []
        for d in normals:
            mask = 0
            for i, u in enumerate(local):
                if d.dot(u - center) == 1:
                    mask |= 1 << i
            masks.append(mask)
        self._hull_cache = _Hull(p0, basis, pivots, local, center, normals, masks)
        return self._hull_cache

    def contains_point(self, q: Sequence) -> bool:
        q = q if isinstance(q, Vector) else Vector(q)
        hull = self._hull()
        w = q - hull.origin
        u = Vector._raw(tuple(w[k] for k in hull.pivots))
        back = [ZERO] * self.dim
        for coef, row in zip(u, hull.basis):
            for j, r in enumerate(row):
                back[j] += coef * r
        if tuple(back) != tuple(w):
            return False
        return all(d.dot(u - hull.center) <= 1 for d in hull.normals)

    def _subface_dim(self, mask: int) -> int:
        pts = [u for i, u in enumerate(self._hull().local) if mask >> i & 1]
        p0 = pts[0]
        return rank([p - p0 for p in pts[1:]]) if len(pts) > 1 else 0

    def simplices(self) -> list[list[Vector]]:
        """Fan triangulation of the hull in local coordinates."""
        hull = self._hull()
        m = len(hull.pivots)
        dims: dict[int, int] = {}

        def face_dim(mask):
            if mask not in dims:
                dims[mask] = self._subface_dim(mask)
            return dims[mask]

        def rec(mask: int, k: int) -> list[list[int]]:
            apex = (mask & -mask).bit_length() - 1
            if k == 0:
                return [[apex]]
            subs = set()
            for fm in hull.masks:
                s = mask & fm
                if s and s != mask and not (s >> apex & 1) and face_dim(s) == k - 1:
                    subs.add(s)
            out = []
            for s in sorted(subs):
                for simplex in rec(s, k - 1):
                    out.append([apex] + simplex)
            return out

        full = (1 << len(hull.local)) - 1
        return [[hull.local[i] for i in s] for s in rec(full, m)]

    def volume(self) -> Fraction:
        hull = self._hull()
        m = len(hull.pivots)
        if m == 0:
            return Fraction(1)
        if m == 1:
            return hull.local[1][0] - hull.local[0][0]
        total = ZERO
        for s in self.simplices():
            v0 = s[0]
            total += abs(det([v - v0 for v in s[1:]]))
        return total / factorial(m)


def _general(A) -> GeneralPolytope:
    if isinstance(A, SymmetricPolytope):
        return A.as_general()
    return A


def volume(A) -> Fraction:
    """Exact volume in the affine hull's own dimension.

    Lower-dimensional sets are measured through the coordinate projection
    onto the pivot coordinates of their direction space; that projection is
    canonical for the subspace, so a body and its difference body are
    measured consistently.
    """
    return _general(A).volume()


def contains(A, B) -> bool:
    A, B = _general(A), _general(B)
    if A.dim != B.dim:
        raise DimensionError("dimension mismatch")
    return all(A.contains_point(v) for v in B.vertices)


def minkowski_sum(A, B) -> GeneralPolytope:
    A, B = _general(A), _general(B)
    if A.dim != B.dim:
        raise DimensionError("dimension mismatch")
    return GeneralPolytope((a + b for a in A.vertices for b in B.vertices), A.dim)


def difference_body(A) -> GeneralPolytope:
    A = _general(A)
    return GeneralPolytope((a - b for a in A.vertices for b in A.vertices), A.dim)


def hyperplane_section(P: SymmetricPolytope, d: Sequence) -> GeneralPolytope:
    """``P`` intersected with the central hyperplane ``d . x = 0``."""
    d = d if isinstance(d, Vector) else Vector(d)
    if len(d) != P.dim:
        raise DimensionError("dimension mismatch")
    if d.is_zero():
        raise InputError("zero functional")
    vals = [d.dot(v) for v in P.vertices]
    pts = [v for v, s in zip(P.vertices, vals) if s == 0]
    for i, j in P.edges():
        si, sj = vals[i], vals[j]
        if (si > 0 > sj) or (si < 0 < sj):
            u, w = P.vertices[i], P.vertices[j]
            pts.append(u + (w - u) * (si / (si - sj)))
    return GeneralPolytope(pts, P.dim)
