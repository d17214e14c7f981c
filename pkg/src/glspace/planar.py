"""Minkowski planes: GL classification, edge-length census, the hexagon family."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Optional

from .corpus import angle_sorted, hex_lambda, hex_tilde
from .errors import DimensionError, InputError, TheoremViolation
from .gl_analysis import is_gl
from .normed_space import PolyhedralSpace, dist_point_to_polytope, face_of_functional, norm_eval
from .polytope import SymmetricPolytope
from .rational import ONE, Vector, to_rational


class PlanarTag(enum.Enum):
    PARALLELOGRAM = "Parallelogram"
    AFFINE_REGULAR_HEXAGON = "AffineRegularHexagon"
    NOT_GL = "NotGL"


@dataclass(frozen=True)
class PlanarClass:
    tag: PlanarTag
    basis: Optional[tuple[Vector, Vector]] = None

    @property
    def is_gl(self) -> bool:
        return self.tag is not PlanarTag.NOT_GL


def _planar(X: PolyhedralSpace) -> None:
    if X.dim != 2:
        raise DimensionError(f"planar routine on a {X.dim}-dimensional space")


def boundary_cycle(P: SymmetricPolytope) -> list[Vector]:
    """Ball vertices in counterclockwise order starting at angle 0."""
    return angle_sorted(P.vertices)


def _hexagon_basis(cycle: list[Vector]) -> Optional[tuple[Vector, Vector]]:
    # w_{i+1} = w_i + w_{i+2} for one i forces it for all i by symmetry
    for i in range(3):
        a, b, c = cycle[i], cycle[i + 1], cycle[i + 2]
        if b == a + c:
            return a, c
    return None


def classify_2d(X: PolyhedralSpace) -> PlanarClass:
    _planar(X)
    if not is_gl(X).is_gl:
        return PlanarClass(PlanarTag.NOT_GL)
    cycle = boundary_cycle(X.ball)
    if len(cycle) == 4:
        return PlanarClass(PlanarTag.PARALLELOGRAM, (cycle[0], cycle[1]))
    if len(cycle) == 6:
        basis = _hexagon_basis(cycle)
        if basis is not None:
            return PlanarClass(PlanarTag.AFFINE_REGULAR_HEXAGON, basis)
    raise TheoremViolation(
        f"GL polygon with {len(cycle)} vertices is neither a parallelogram "
        "nor an affine-regular hexagon")


def hexagon_lambda(P: SymmetricPolytope) -> Optional[Fraction]:
    """``lam`` with middle vertex ``lam (x1 + x2)`` for some labelling of a
    hexagon, or None when no labelling has that form."""
    if P.dim != 2 or len(P.vertices) != 6:
        return None
    cycle = boundary_cycle(P)
    for i in range(3):
        a, b, c = cycle[i], cycle[i + 1], cycle[i + 2]
        s = a + c
        # b parallel to a + c
        if b[0] * s[1] == b[1] * s[0]:
            k = 0 if s[0] != 0 else 1
            return b[k] / s[k]
    return None


class LambdaHexagon:
    """Hexagon ``+-x1, +-x2, +-lam (x1 + x2)`` in the ``x1, x2`` basis."""

    def __init__(self, lam):
        self.lam = to_rational(lam)
        self.ball = hex_lambda(self.lam)  # validates the range
        self.space = PolyhedralSpace(self.ball)
        c = (ONE - self.lam) / self.lam
        self.f1 = Vector._raw((ONE, c))
        self.f2 = Vector._raw((c, ONE))
        self.f3 = Vector._raw((-ONE, ONE))
        self.x1 = Vector.of(1, 0)
        self.x2 = Vector.of(0, 1)

    @property
    def functionals(self) -> tuple[Vector, Vector, Vector]:
        return self.f1, self.f2, self.f3

    def norm(self, x) -> Fraction:
        x = Vector(x)
        return max(abs(f.dot(x)) for f in self.functionals)

    @cached_property
    def witness(self) -> tuple[Fraction, Fraction]:
        """``(dist(x1, Face(f2)), 1 - f2(x1))``; equal only at ``lam = 1``."""
        face = face_of_functional(self.space, self.f2)
        dist, _ = dist_point_to_polytope(self.space, self.x1, face)
        return dist, ONE - self.f2.dot(self.x1)


class EdgeLength(NamedTuple):
    edge: tuple[Vector, Vector]
    length: Fraction


def segment_census(X: PolyhedralSpace) -> list[EdgeLength]:
    """Own-norm length of one edge from each antipodal pair, longest first."""
    _planar(X)
    cycle = boundary_cycle(X.ball)
    half = len(cycle) // 2
    out = []
    for i in range(half):
        a, b = cycle[i], cycle[i + 1]
        out.append(EdgeLength((a, b), norm_eval(X, b - a)))
    out.sort(key=lambda e: -e.length)
    return out


def census_ok(census: list[EdgeLength]) -> bool:
    """At most three pairs reach length 1, and three only with two exact 1s."""
    long = [e.length for e in census if e.length >= 1]
    if len(long) > 3:
        return False
    if len(long) == 3:
        return sum(1 for x in long if x == 1) >= 2
    return True


class PropertyAProbe(NamedTuple):
    minimum: Fraction
    bound: Fraction
    consistent: bool
    minimizer: Vector


def property_a_probe(t, alpha) -> PropertyAProbe:
    """Minimum of ``||x - alpha y||`` over the top edge of ``hex_tilde``.

    ``y = t e2 + (1 - t) e1`` runs along the edge from ``e1 = (1,0)`` to
    ``e2 = (1/2,1)``; the top edge is the face of the second coordinate
    functional.  For ``alpha > 1`` the minimum must exceed ``1 - alpha t``.
    """
    t, alpha = to_rational(t), to_rational(alpha)
    if not 0 <= t <= 1:
        raise InputError(f"t = {t} outside [0, 1]")
    if alpha <= 0:
        raise InputError(f"alpha = {alpha} must be positive")
    X = PolyhedralSpace(hex_tilde())
    e1, e2 = Vector.of(1, 0), Vector.of(Fraction(1, 2), 1)
    y = e2 * t + e1 * (ONE - t)
    face = face_of_functional(X, Vector.of(0, 1))
    minimum, x = dist_point_to_polytope(X, y * alpha, face)
    bound = ONE - alpha * t
    consistent = minimum > bound if alpha > 1 else True
    return PropertyAProbe(minimum, bound, consistent, x)
