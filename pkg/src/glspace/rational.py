"""Exact rational scalars, vectors and small dense linear algebra.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  Vectors are immutable tuples of
fractions that refuse mixed-dimension arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionError, InputError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they would smuggle rounding into exact code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    raise InputError(f"not a rational: {value!r}")


class Vector(tuple):
    """Fixed-length tuple of Fractions with vector-space operators.

    ``+``, ``-`` and scalar ``*`` act coordinatewise; comparison and hashing
    are inherited from ``tuple`` so vectors sort lexicographically.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable = ()):
        return super().__new__(cls, (to_rational(c) for c in coords))

    @classmethod
    def of(cls, *coords) -> "Vector":
        return cls(coords)

    @classmethod
    def zero(cls, dim: int) -> "Vector":
        return tuple.__new__(cls, (ZERO,) * dim)

    @classmethod
    def unit(cls, dim: int, k: int) -> "Vector":
        return tuple.__new__(cls, (ONE if i == k else ZERO for i in range(dim)))

    @classmethod
    def _raw(cls, coords) -> "Vector":
        # coords already Fractions
        return tuple.__new__(cls, coords)

    @property
    def dim(self) -> int:
        return len(self)

    def _check(self, other) -> None:
        if len(self) != len(other):
            raise DimensionError(f"dimension mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other):
        self._check(other)
        return Vector._raw(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        return Vector._raw(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Vector._raw(-a for a in self)

    def __mul__(self, scalar):
        if isinstance(scalar, tuple):
            return NotImplemented
        s = to_rational(scalar)
        return Vector._raw(s * a for a in self)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = to_rational(scalar)
        return Vector._raw(a / s for a in self)

    def dot(self, other) -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self, other)), ZERO)

    def abs(self) -> "Vector":
        return Vector._raw(abs(a) for a in self)

    def is_zero(self) -> bool:
        return not any(self)

    def __repr__(self):
        return "Vector(" + ", ".join(fmt(c) for c in self) + ")"

    def __str__(self):
        return "(" + ",".join(fmt(c) for c in self) + ")"


def fmt(q: Fraction) -> str:
    """Render a rational as ``p/q`` in lowest terms, integers bare."""
    return str(q)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def concat(*parts: Sequence) -> Vector:
    return Vector._raw(tuple(c for p in parts for c in p))


def primitive_integer(coords: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to the positive multiple that is a
    primitive integer vector (coprime entries)."""
    den = reduce(lcm, (Fraction(c).denominator for c in coords), 1)
    ints = [int(Fraction(c) * den) for c in coords]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(i // g for i in ints)


def integer_row(coords: Sequence) -> tuple[list[int], int]:
    """Return ``(ints, scale)`` with ``ints == scale * coords`` and
    ``scale`` the least positive integer making every entry integral."""
    scale = reduce(lcm, (c.denominator for c in coords), 1)
    return [c.numerator * (scale // c.denominator) for c in coords], scale


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a matrix given as a list of rows.

    Returns the nonzero rows of the RREF and their pivot columns.  The RREF
    of a matrix depends only on its row space, which callers rely on to get
    coordinates that are canonical for a subspace.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                mi, mr = m[i], m[r]
                m[i] = [a - f * b for a, b in zip(mi, mr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational or integer matrix (fraction-free elimination)."""
    m = [[Fraction(x) for x in r] for r in rows]
    m = [[x.numerator * (reduce(lcm, (y.denominator for y in r), 1) // x.denominator)
          for x in r] for r in m]
    return _int_rank(m)


def _int_rank(m: list[list[int]]) -> int:
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            if a:
                mr = m[r]
                m[i] = [p * x - a * y for x, y in zip(m[i], mr)]
        r += 1
        if r == len(m):
            break
    return r


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    return _int_rank([list(r) for r in rows])


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    if not points:
        raise InputError("affine rank of an empty set")
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]]) if len(points) > 1 else 0


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    red, piv = rref(aug)
    if piv != list(range(n)):
        raise InputError("singular system")
    return [red[i][n] for i in range(n)]


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant by exact Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in matrix]
    n = len(m)
    result = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return ZERO
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        p = m[c][c]
        result *= p
        for i in range(c + 1, n):
            f = m[i][c] / p
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result
