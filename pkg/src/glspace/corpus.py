"""Named fixture polytopes and seeded random symmetric polytopes."""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .errors import GeometryError, InputError
from .polytope import SymmetricPolytope, from_vertices
from .rational import Vector, to_rational

F = Fraction
HALF = F(1, 2)


def _sym(points) -> list[Vector]:
    vs = [Vector(p) for p in points]
    return vs + [-v for v in vs]


def square() -> SymmetricPolytope:
    return from_vertices(2, [(1, 1), (1, -1), (-1, 1), (-1, -1)])


def diamond() -> SymmetricPolytope:
    return from_vertices(2, _sym([(1, 0), (0, 1)]))


def hex_tilde() -> SymmetricPolytope:
    """Hexagon with vertices ``+-(1,0), +-(1/2,1), +-(-1/2,1)``."""
    return from_vertices(2, _sym([(1, 0), (HALF, 1), (-HALF, 1)]))


def hex_lambda(lam) -> SymmetricPolytope:
    """Hexagon ``+-(1,0), +-(0,1), +-(lam,lam)`` for ``lam`` in ``(1/2, 1]``."""
    lam = to_rational(lam)
    if not HALF < lam <= 1:
        raise GeometryError(f"hexagon parameter {lam} outside (1/2, 1]")
    return from_vertices(2, _sym([(1, 0), (0, 1), (lam, lam)]))


def oct_rational() -> SymmetricPolytope:
    q = F(3, 4)
    return from_vertices(2, _sym([(1, 0), (0, 1), (q, q), (q, -q)]))


def cube3() -> SymmetricPolytope:
    return from_vertices(3, itertools.product((1, -1), repeat=3))


def crosspoly3() -> SymmetricPolytope:
    return from_vertices(3, _sym([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))


def prism_hex3() -> SymmetricPolytope:
    """Prism over the ``hex_tilde`` hexagon (its l-infinity sum with R)."""
    base = hex_tilde().vertices
    return from_vertices(3, [(*v, s) for v in base for s in (1, -1)])


FIXTURES = {
    "square": square,
    "diamond": diamond,
    "hex_tilde": hex_tilde,
    "oct_rational": oct_rational,
    "cube3": cube3,
    "crosspoly3": crosspoly3,
    "prism_hex3": prism_hex3,
}

_LAMBDA = re.compile(r"^hex_lambda[(:_ ]\s*([-0-9/]+)\s*\)?$")


def fixture(name: str) -> SymmetricPolytope:
    """Look up a named fixture; ``hex_lambda(p/q)`` selects a family member."""
    name = name.strip()
    if name in FIXTURES:
        return FIXTURES[name]()
    m = _LAMBDA.match(name)
    if m:
        return hex_lambda(m.group(1))
    raise InputError(f"unknown fixture {name!r}")


def fixture_names() -> list[str]:
    return [*FIXTURES, "hex_lambda(<p/q>)"]


# --------------------------------------------------------------------------
# random generators


@dataclass(frozen=True)
class CorpusSpec:
    kind: str  # "fixture" | "polygon" | "polytope3" | "absolute"
    seed: int = 0
    pairs: int = 4
    max_den: int = 16
    name: str | None = None
    dim: int = 2

    def __post_init__(self):
        if self.kind not in ("fixture", "polygon", "polytope3", "absolute"):
            raise InputError(f"unknown corpus kind {self.kind!r}")
        if self.kind == "polygon" and not 2 <= self.pairs <= 6:
            raise InputError("polygons take 2..6 antipodal vertex pairs")
        if self.max_den < 1:
            raise InputError("denominator bound must be positive")


def _upper(p) -> bool:
    return p[1] > 0 or (p[1] == 0 and p[0] > 0)


def _cross(a, b) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _angle_cmp(a, b) -> int:
    ha, hb = _upper(a), _upper(b)
    if ha != hb:
        return -1 if ha else 1
    c = _cross(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def angle_sorted(points) -> list[Vector]:
    """Counterclockwise order starting at angle 0 (exact comparisons)."""
    return sorted(points, key=cmp_to_key(_angle_cmp))


def _strictly_convex(cycle) -> bool:
    n = len(cycle)
    for i in range(n):
        a, b, c = cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]
        if _cross(b - a, c - b) <= 0:
            return False
    return True


MAX_ATTEMPTS = 200_000


def _rational(rng: random.Random, den: int, lo: int, hi: int) -> Fraction:
    return F(rng.randint(lo * den, hi * den), den)


def random_symmetric_polygon(spec: CorpusSpec) -> SymmetricPolytope:
    """Centrally symmetric convex polygon with exactly ``spec.pairs`` vertex pairs.

    Points are drawn from the annulus ``9/16 <= |p|^2 <= 1`` in the upper
    half-plane and rejection-sampled until the symmetric cycle is strictly
    convex.
    """
    rng = random.Random(spec.seed)
    den = spec.max_den
    lo2, hi2 = F(9, 16), F(1)
    for _ in range(MAX_ATTEMPTS):
        pts = []
        while len(pts) < spec.pairs:
            p = Vector._raw((_rational(rng, den, -1, 1), _rational(rng, den, 0, 1)))
            if _upper(p) and lo2 <= p.dot(p) <= hi2:
                pts.append(p)
        cycle = angle_sorted(pts + [-p for p in pts])
        if _strictly_convex(cycle):
            P = from_vertices(2, cycle)
            assert len(P.vertices) == 2 * spec.pairs
            return P
    raise GeometryError(f"no convex polygon after {MAX_ATTEMPTS} attempts")


def random_symmetric_polytope3(spec: CorpusSpec) -> SymmetricPolytope:
    """Hull of ``spec.pairs`` random antipodal pairs plus the coordinate
    octahedron (which keeps the origin interior)."""
    rng = random.Random(spec.seed)
    den = spec.max_den
    pts = [Vector.unit(3, k) for k in range(3)]
    for _ in range(spec.pairs):
        pts.append(Vector._raw(tuple(_rational(rng, den, -1, 1) for _ in range(3))))
    return from_vertices(3, pts + [-p for p in pts])


def random_absolute_norm(spec: CorpusSpec) -> SymmetricPolytope:
    """Unit ball of a random absolute norm on ``R^spec.dim``.

    The hull of all sign flips of ``e_k`` and of points from ``(1/2,1]^n``
    stays inside the unit cube, so every ``e_k`` keeps norm one, and the
    extra points lie outside the l1 ball.
    """
    rng = random.Random(spec.seed)
    n, den = spec.dim, spec.max_den
    pts = [Vector.unit(n, k) for k in range(n)]
    for _ in range(spec.pairs):
        pts.append(Vector._raw(tuple(F(rng.randint(den // 2 + 1, den), den) for _ in range(n))))
    flips = []
    for p in pts:
        for signs in itertools.product((1, -1), repeat=n):
            flips.append(Vector._raw(tuple(s * x for s, x in zip(signs, p))))
    return from_vertices(n, flips)


def generate(spec: CorpusSpec) -> SymmetricPolytope:
    if spec.kind == "fixture":
        if spec.name is None:
            raise InputError("fixture spec needs a name")
        return fixture(spec.name)
    if spec.kind == "polygon":
        return random_symmetric_polygon(spec)
    if spec.kind == "polytope3":
        return random_symmetric_polytope3(spec)
    return random_absolute_norm(spec)


def affine_regular_hexagon(v1, v2) -> SymmetricPolytope:
    v1, v2 = Vector(v1), Vector(v2)
    return from_vertices(2, _sym([v1, v2, v1 + v2]))


def planar_corpus(seed: int = 0, count: int = 100) -> list[SymmetricPolytope]:
    """Deterministic mixed corpus of symmetric polygons.

    Cycles through random polygons with 2..6 vertex pairs and random
    rational linear images of the affine-regular hexagon, so both GL classes
    and many non-GL polygons appear.
    """
    rng = random.Random(seed)
    out = []
    i = 0
    while len(out) < count:
        kind = i % 6
        sub = rng.randrange(1 << 30)
        if kind == 5:
            while True:
                a, b, c, d = (F(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(4))
                if a * d - b * c != 0:
                    break
            out.append(affine_regular_hexagon((a, c), (b, d)))
        else:
            out.append(random_symmetric_polygon(CorpusSpec("polygon", sub, pairs=kind + 2)))
        i += 1
    return out
