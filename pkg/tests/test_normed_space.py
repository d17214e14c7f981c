import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from glspace.corpus import CorpusSpec, hex_lambda, hex_tilde, random_symmetric_polygon, square
from glspace.errors import DimensionError, FunctionalNotNorming
from glspace.normed_space import (PolyhedralSpace, dist_point_to_polytope, face_of_functional,
                                  hausdorff_distance, norm_eval)
from glspace.polytope import GeneralPolytope, polar_dual
from glspace.rational import Vector

import oracles

H = F(1, 2)


def test_norm_examples():
    assert norm_eval(PolyhedralSpace(hex_tilde()), (1, 1)) == F(3, 2)
    assert norm_eval(PolyhedralSpace(square()), (0, 0)) == 0
    assert norm_eval(PolyhedralSpace(hex_lambda(1)), (1, -1)) == 2
    with pytest.raises(DimensionError):
        norm_eval(PolyhedralSpace(square()), (1, 2, 3))


def test_vertices_have_norm_one_and_dual_ball():
    X = PolyhedralSpace(hex_tilde())
    assert all(X.norm(v) == 1 for v in X.ball.vertices)
    assert X.dual_ball == polar_dual(X.ball)


def test_distance_examples():
    X = PolyhedralSpace(hex_lambda(F(3, 4)))
    d, a = dist_point_to_polytope(X, (1, 0), [(F(3, 4), F(3, 4)), (0, 1)])
    assert d == 1
    d, a = dist_point_to_polytope(X, (0, 1), [(F(3, 4), F(3, 4)), (0, 1)])
    assert d == 0 and a == Vector.of(0, 1)
    Y = PolyhedralSpace(hex_lambda(1))
    d, a = dist_point_to_polytope(Y, (0, -1), [(1, 1), (0, 1)])
    assert d == 2


def test_hausdorff():
    X = PolyhedralSpace(square())
    assert hausdorff_distance(X, square(), square()) == 0
    assert hausdorff_distance(X, [(0, 0)], square()) == 1
    assert hausdorff_distance(X, [(0, 0), (1, 0)], [(0, 0)]) == 1


def test_faces():
    assert set(face_of_functional(PolyhedralSpace(hex_tilde()), (0, 1)).vertices) == \
        {Vector.of(H, 1), Vector.of(-H, 1)}
    assert set(face_of_functional(PolyhedralSpace(square()), (1, 0)).vertices) == \
        {Vector.of(1, 1), Vector.of(1, -1)}
    assert set(face_of_functional(PolyhedralSpace(hex_tilde()), (1, H)).vertices) == \
        {Vector.of(1, 0), Vector.of(H, 1)}
    with pytest.raises(FunctionalNotNorming):
        face_of_functional(PolyhedralSpace(square()), (2, 0))


@pytest.mark.parametrize("seed", range(12))
def test_distance_against_segment_oracle(seed):
    P = random_symmetric_polygon(CorpusSpec("polygon", seed, pairs=2 + seed % 5))
    X = PolyhedralSpace(P)
    rng = random.Random(seed)
    cycle = oracles.hull_2d(P.vertices)
    funcs = oracles.polygon_functionals(cycle)
    for _ in range(5):
        i = rng.randrange(len(cycle))
        p, q = cycle[i], cycle[(i + 1) % len(cycle)]
        y = (F(rng.randint(-8, 8), 4), F(rng.randint(-8, 8), 4))
        d, a = dist_point_to_polytope(X, y, [p, q])
        assert d == oracles.dist_to_segment(funcs, y, p, q)
        assert norm_eval(X, Vector(y) - a) == d
        assert GeneralPolytope([p, q]).contains_point(a)


q = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@given(st.tuples(q, q), st.tuples(q, q), q)
def test_norm_axioms(x, y, lam):
    X = PolyhedralSpace(hex_tilde())
    x, y = Vector(x), Vector(y)
    assert X.norm(x * lam) == abs(lam) * X.norm(x)
    assert X.norm(x + y) <= X.norm(x) + X.norm(y)
