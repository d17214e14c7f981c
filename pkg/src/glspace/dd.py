"""Exact double description: extreme rays of pointed polyhedral cones.

All arithmetic is on Python ints.  Rays are kept as primitive integer
vectors together with the bitmask of constraint rows they make tight, and
adjacency is decided by the combinatorial test.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

from .errors import GeometryError
from .rational import Vector, integer_row, solve


def _primitive(v):
    g = reduce(gcd, v, 0)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def extreme_rays(rows: Sequence[Sequence[int]]) -> list[tuple[tuple[int, ...], int]]:
    """Extreme rays of ``{y : row . y >= 0 for every row}``.

    Returns ``(ray, tight_mask)`` pairs where bit ``i`` of the mask is set when
    row ``i`` vanishes on the ray.  Raises GeometryError if the cone is not
    pointed (the rows do not have full column rank).
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        raise GeometryError("no constraints")
    d = len(rows[0])

    # initial simplicial cone from d independent rows, taken greedily in order
    basis: list[int] = []
    echelon: list[list[Fraction]] = []
    for i, r in enumerate(rows):
        v = [Fraction(x) for x in r]
        for e in echelon:
            p = next(k for k, x in enumerate(e) if x != 0)
            if v[p] != 0:
                f = v[p] / e[p]
                v = [a - f * b for a, b in zip(v, e)]
        if any(v):
            echelon.append(v)
            basis.append(i)
            if len(basis) == d:
                break
    if len(basis) < d:
        raise GeometryError("cone has a lineality space")

    A = [rows[i] for i in basis]
    rays: list[tuple[tuple[int, ...], int]] = []
    for k in range(d):
        e = [0] * d
        e[k] = 1
        col = solve(A, e)  # A col = e_k, so row basis[k] is positive, others tight
        ints, _ = integer_row(col)
        ray = _primitive(ints)
        mask = 0
        for j, i in enumerate(basis):
            if j != k:
                mask |= 1 << i
        rays.append((ray, mask))

    done = 0
    for i in basis:
        done |= 1 << i
    for i, row in enumerate(rows):
        if done >> i & 1:
            continue
        rays = _add_row(rays, row, i, d, done)
        done |= 1 << i
    return rays


def _add_row(rays, row, index, d, done):
    pos, neg, zero = [], [], []
    for ray, mask in rays:
        v = _dot(row, ray)
        if v > 0:
            pos.append((ray, mask, v))
        elif v < 0:
            neg.append((ray, mask, v))
        else:
            zero.append((ray, mask | (1 << index)))
    if not neg:
        return [(r, m) for r, m, _ in pos] + zero
    result = [(r, m) for r, m, _ in pos] + zero
    if pos:
        all_masks = [m for _, m in rays]
        need = d - 2
        for rp, mp, vp in pos:
            for rn, mn, vn in neg:
                common = mp & mn
                if bin(common).count("1") < need:
                    continue
                adjacent = True
                for m in all_masks:
                    if m != mp and m != mn and (m & common) == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                new = _primitive([vp * a - vn * b for a, b in zip(rn, rp)])
                result.append((new, common | (1 << index)))
    return result


def polar_vertices(points: Sequence[Sequence]) -> tuple[list[Vector], list[int]]:
    """Vertices of ``{x : p . x <= 1 for every p in points}``.

    Returns the vertices and, per vertex, the bitmask of points ``p`` with
    ``p . x == 1``.  Raises GeometryError when the set is unbounded.
    """
    n = len(points[0])
    cone_rows = []
    for p in points:
        ints, _ = integer_row([Fraction(-1), *map(Fraction, p)])
        cone_rows.append([-x for x in ints])  # t - p.x >= 0, scaled
    cone_rows.append([1] + [0] * n)  # t >= 0
    t_bit = 1 << len(points)
    verts, masks = [], []
    for ray, mask in extreme_rays(cone_rows):
        if ray[0] <= 0:
            raise GeometryError("polyhedron is unbounded")
        verts.append(Vector._raw(tuple(Fraction(x, ray[0]) for x in ray[1:])))
        masks.append(mask & ~t_bit)
    return verts, masks


def polyhedron_vertices(inequalities: Sequence[tuple[Sequence, Fraction]],
                        equalities: Sequence[tuple[Sequence, Fraction]] = ()) -> list[Vector]:
    """Vertices of a bounded polyhedron ``{A x <= b, E x = f}``.

    The empty set yields an empty list; an unbounded set raises GeometryError.
    """
    rows = list(inequalities)
    for e, f in equalities:
        rows.append((e, f))
        rows.append(([-x for x in e], -f))
    n = len(rows[0][0])
    cone_rows = []
    for a, b in rows:
        ints, _ = integer_row([Fraction(b), *(-Fraction(x) for x in a)])
        cone_rows.append(ints)  # b t - a.x >= 0
    cone_rows.append([1] + [0] * n)
    verts = set()
    for ray, _ in extreme_rays(cone_rows):
        if ray[0] <= 0:
            raise GeometryError("polyhedron is unbounded")
        verts.add(Vector._raw(tuple(Fraction(x, ray[0]) for x in ray[1:])))
    return sorted(verts)
