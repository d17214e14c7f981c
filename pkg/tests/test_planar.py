from fractions import Fraction as F

import pytest

from glspace.corpus import (CorpusSpec, affine_regular_hexagon, cube3, diamond, hex_lambda,
                            hex_tilde, oct_rational, planar_corpus, random_symmetric_polygon,
                            square)
from glspace.errors import DimensionError, GeometryError, InputError
from glspace.gl_analysis import is_gl
from glspace.normed_space import PolyhedralSpace, norm_eval
from glspace.planar import (LambdaHexagon, PlanarTag, census_ok, classify_2d, hexagon_lambda,
                            property_a_probe, segment_census)
from glspace.rational import Vector


def test_classify_examples():
    c = classify_2d(PolyhedralSpace(square()))
    assert c.tag is PlanarTag.PARALLELOGRAM and c.basis == (Vector.of(1, 1), Vector.of(-1, 1))
    c = classify_2d(PolyhedralSpace(hex_lambda(1)))
    assert c.tag is PlanarTag.AFFINE_REGULAR_HEXAGON and c.basis == (Vector.of(1, 0), Vector.of(0, 1))
    assert classify_2d(PolyhedralSpace(hex_lambda(F(3, 4)))).tag is PlanarTag.NOT_GL
    assert classify_2d(PolyhedralSpace(oct_rational())).tag is PlanarTag.NOT_GL
    with pytest.raises(DimensionError):
        classify_2d(PolyhedralSpace(cube3()))


def test_basis_witness_reproduces_ball():
    for P in (square(), diamond(), hex_tilde(), affine_regular_hexagon((2, 1), (-1, 3))):
        c = classify_2d(PolyhedralSpace(P))
        v1, v2 = c.basis
        if c.tag is PlanarTag.PARALLELOGRAM:
            expected = {v1, v2, -v1, -v2}
        else:
            expected = {v1, v2, v1 + v2, -v1, -v2, -v1 - v2}
        assert set(P.vertices) == expected


def test_lambda_family():
    assert hexagon_lambda(hex_lambda(F(3, 4))) == F(3, 4)
    assert hexagon_lambda(square()) is None
    with pytest.raises(GeometryError):
        hex_lambda(F(1, 2))
    for lam in (F(3, 5), F(3, 4), F(9, 10), F(1)):
        H = LambdaHexagon(lam)
        for x in [(1, 2), (F(-1, 3), 1), (3, -2)]:
            assert H.norm(x) == norm_eval(H.space, x)
        dist, plain = H.witness
        assert dist == 1 and plain == (2 * lam - 1) / lam
        assert (dist - plain == 0) == (lam == 1)


def test_segment_census_examples():
    assert [e.length for e in segment_census(PolyhedralSpace(square()))] == [2, 2]
    assert [e.length for e in segment_census(PolyhedralSpace(hex_lambda(F(3, 4))))] == [F(4, 3), 1, 1]
    assert [e.length for e in segment_census(PolyhedralSpace(hex_lambda(1)))] == [1, 1, 1]


def test_gl_polygons_have_long_edges():
    for P in planar_corpus(seed=3, count=30):
        X = PolyhedralSpace(P)
        census = segment_census(X)
        assert census_ok(census)
        if is_gl(X).is_gl:
            assert all(e.length >= 1 for e in census)


def test_property_a_examples():
    r = property_a_probe(F(1, 2), F(3, 2))
    assert r.minimum == F(3, 4) and r.bound == F(1, 4) and r.consistent
    r = property_a_probe(F(1, 2), 1)
    assert r.minimum == r.bound == F(1, 2) and r.minimizer == Vector.of(F(1, 2), 1)
    r = property_a_probe(0, 2)
    assert r.bound == 1 and r.minimum > 1
    with pytest.raises(InputError):
        property_a_probe(F(3, 2), 1)
    with pytest.raises(InputError):
        property_a_probe(0, 0)


def test_random_parallelograms_classify():
    for seed in range(5):
        P = random_symmetric_polygon(CorpusSpec("polygon", seed, pairs=2))
        assert classify_2d(PolyhedralSpace(P)).tag is PlanarTag.PARALLELOGRAM
