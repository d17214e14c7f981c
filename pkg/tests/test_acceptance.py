"""Acceptance criteria 1-9.

Each test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary, or directly when this file is run as a script.
"""
from __future__ import annotations

import itertools
import time
from fractions import Fraction as F
from functools import lru_cache
from math import comb

from glspace import _backend
from glspace.abs_sums import cross_validate, is_gl_respecting, is_glm, validate_absolute
from glspace.corpus import (CorpusSpec, cube3, crosspoly3, diamond, hex_lambda,
                            hex_tilde, oct_rational, planar_corpus, prism_hex3,
                            random_absolute_norm, random_symmetric_polygon,
                            random_symmetric_polytope3, square)
from glspace.errors import TheoremViolation
from glspace.gl_analysis import difference_body_check, is_gl, rogers_shephard_audit
from glspace.normed_space import DistanceProgram, PolyhedralSpace
from glspace.planar import (LambdaHexagon, PlanarTag, classify_2d, property_a_probe,
                            segment_census)
from glspace.polyfile import emit, parse
from glspace.polytope import GeneralPolytope, facets_of, polar_dual

import oracles

RESULTS: dict[int, tuple[bool, str]] = {}
SUITE_LIMIT = 600.0


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


@lru_cache(maxsize=None)
def planar_set():
    return tuple(planar_corpus(seed=0, count=100))


@lru_cache(maxsize=None)
def solid_set():
    three = [cube3(), crosspoly3(), prism_hex3()]
    three += [random_symmetric_polytope3(CorpusSpec("polytope3", s, pairs=2)) for s in range(4)]
    return tuple(three)


def _fixtures_2d():
    return [square(), diamond(), hex_tilde(), hex_lambda(1), hex_lambda(F(3, 5)),
            hex_lambda(F(3, 4)), hex_lambda(F(9, 10)), oct_rational()]


# --------------------------------------------------------------------------


def test_criterion_1_gl_verdicts():
    expected = [(square(), True), (diamond(), True), (hex_tilde(), True), (hex_lambda(1), True),
                (hex_lambda(F(3, 5)), False), (hex_lambda(F(3, 4)), False),
                (hex_lambda(F(9, 10)), False), (oct_rational(), False)]
    seed = 0
    randoms = []
    while len(randoms) < 50:
        P = random_symmetric_polygon(CorpusSpec("polygon", seed, pairs=4 + seed % 3))
        seed += 1
        randoms.append((P, False))
    wrong, slowest = [], 0.0
    for P, want in expected + randoms:
        t = time.perf_counter()
        got = is_gl(PolyhedralSpace(P)).is_gl
        slowest = max(slowest, time.perf_counter() - t)
        if got is not want:
            wrong.append(str(P))
    ok = not wrong and slowest < 1.0
    record(1, ok, f"{len(expected) + len(randoms)} verdicts, {len(wrong)} wrong, "
                  f"slowest {slowest:.3f}s (< 1s)")


def test_criterion_2_witness_numbers():
    parts, ok = [], True
    for lam in (F(3, 5), F(3, 4), F(1)):
        H = LambdaHexagon(lam)
        dist, plain = H.witness
        gap = dist - plain
        good = (dist == 1 and plain == (2 * lam - 1) / lam and gap == (1 - lam) / lam
                and (gap == 0) == (lam == 1))
        ok &= good
        parts.append(f"lam={lam}: dist={dist}, 1-f2(x1)={plain}, gap={gap}")
    record(2, ok, "; ".join(parts))


def test_criterion_3_planar_classification():
    t = time.perf_counter()
    disagreements = bad_class = violations = gl_count = 0
    for P in planar_set():
        X = PolyhedralSpace(P)
        try:
            c = classify_2d(X)
        except TheoremViolation:
            violations += 1
            continue
        gl = is_gl(X).is_gl
        if c.is_gl != gl or gl != oracles.gl_2d(P.vertices):
            disagreements += 1
        if gl:
            gl_count += 1
            if c.tag not in (PlanarTag.PARALLELOGRAM, PlanarTag.AFFINE_REGULAR_HEXAGON):
                bad_class += 1
    elapsed = time.perf_counter() - t
    ok = disagreements == bad_class == violations == 0 and elapsed < 120
    record(3, ok, f"100 polygons ({gl_count} GL), {disagreements} disagreements, "
                  f"{violations} theorem violations, {elapsed:.1f}s (< 120s)")


def _absolute_negatives():
    out, seed = [], 0
    while len(out) < 2:
        P = random_absolute_norm(CorpusSpec("absolute", seed, pairs=1, dim=2 + seed % 2))
        seed += 1
        if any(x not in (0, 1, -1) for d in P.functionals for x in d):
            out.append(P)
    return out


def test_criterion_4_glm():
    positives = [diamond(), square(), crosspoly3(), cube3()]
    negatives = [hex_tilde(), *_absolute_negatives()]
    ok = True
    for P in positives:
        E = validate_absolute(P)
        ok &= is_glm(E).is_glm and is_gl_respecting(E)
    prefilter_hit = consistent = True
    for P in negatives:
        E = validate_absolute(P)
        v = is_glm(E)
        audit = is_glm(E, audit=True)
        ok &= not v.is_glm and not is_gl_respecting(E) and not audit.is_glm
        prefilter_hit &= any(not r.prefilter for r in v.failures)
        consistent &= all(r.consistent for r in audit.results)
        consistent &= all(r.counterexample is not None for r in audit.results if not r.prefilter)
    ok &= prefilter_hit and consistent
    record(4, ok, f"{len(positives)} GLM norms accepted, {len(negatives)} rejected by the "
                  f"prefilter, audit consistent = {consistent}")


def test_criterion_5_cross_validation():
    t = time.perf_counter()
    outers = {"l_inf": square(), "l_1": diamond(), "hex": hex_tilde()}
    comps = {"two hexagons": [hex_tilde(), hex_tilde()], "square+hexagon": [square(), hex_tilde()]}
    ok, cells = True, []
    for (oname, P), (cname, cs) in itertools.product(outers.items(), comps.items()):
        r = cross_validate(validate_absolute(P), cs)
        ok &= r.agree
        if oname == "hex":
            ok &= not r.sum_gl
            w = r.sum_verdict.non_plump[0]
            ok &= w.facet.dim == 4 and w.witness.distance > w.witness.bound
            cells.append(f"{oname}/{cname}: glm={r.glm} gl={r.sum_gl} witness facet "
                         f"{w.facet.functional} at {w.witness.vertex}")
        else:
            ok &= r.glm and r.sum_gl
            cells.append(f"{oname}/{cname}: glm={r.glm} gl={r.sum_gl}")
    elapsed = time.perf_counter() - t
    ok &= elapsed < 300
    record(5, ok, f"6 cells agree in {elapsed:.1f}s (< 300s); " + "; ".join(cells))


def test_criterion_6_audits():
    plump_checked = lower_violations = diff_failures = rs_failures = 0
    bodies = 0
    for P in [*_fixtures_2d(), *planar_set(), *solid_set()]:
        X = PolyhedralSpace(P)
        for r in is_gl(X).reports:
            lower_violations += sum(1 for rec in r.records if rec.distance < rec.bound)
            if r.plump:
                plump_checked += 1
                if not difference_body_check(X, r.facet, r):
                    diff_failures += 1
        for K in [P.as_general(), *(f.polytope() for f in facets_of(P)[::2])]:
            bodies += 1
            if not rogers_shephard_audit(K).ok:
                rs_failures += 1
    simplices = [GeneralPolytope([(0,), (3,)]),
                 GeneralPolytope([(0, 0), (1, 0), (0, 1)]),
                 GeneralPolytope([(F(1, 2), 1), (-1, F(1, 3)), (2, -1)]),
                 GeneralPolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]),
                 GeneralPolytope([(1, 2, 0), (0, 1, 1), (F(1, 2), 0, 3), (2, 2, 2)])]
    equality = True
    for S in simplices:
        audit = rogers_shephard_audit(S)
        m = S.affine_dim
        equality &= audit.lhs == audit.rhs == comb(2 * m, m) * S.volume()
    ok = lower_violations == diff_failures == rs_failures == 0 and equality
    record(6, ok, f"{plump_checked} plump facets pass the difference-body check, "
                  f"{lower_violations} lower-bound violations, Rogers-Shephard on {bodies} "
                  f"bodies ({rs_failures} failures), simplex equality = {equality}")


def test_criterion_7_segment_census():
    polys = [*_fixtures_2d(), *planar_set()]
    failures = three = 0
    for P in polys:
        lengths = [e.length for e in segment_census(PolyhedralSpace(P))]
        long = [x for x in lengths if x >= 1]
        if len(long) > 3:
            failures += 1
        if len(long) == 3:
            three += 1
            if sum(1 for x in long if x == 1) < 2:
                failures += 1
    record(7, failures == 0, f"{len(polys)} polygons, {three} with three long pairs, "
                             f"{failures} violations")


def test_criterion_8_property_a():
    ts = [F(0), F(1, 4), F(1, 2), F(3, 4), F(1)]
    alphas = [F(9, 8), F(5, 4), F(3, 2), F(2)]
    strict = all(property_a_probe(t, a).minimum > 1 - a * t for t in ts for a in alphas)
    equal = all(property_a_probe(t, 1).minimum == 1 - t for t in ts)
    record(8, strict and equal, f"strict excess on the 5x4 grid = {strict}; "
                                f"equality at alpha=1 for every t = {equal}")


def test_criterion_9_infrastructure():
    polys = [*_fixtures_2d(), *planar_set(), *solid_set()]
    involution = all(polar_dual(polar_dual(P)) == P for P in polys)
    round_trip = all(parse(emit(P)) == P and parse(emit(P, "hrep")) == P for P in polys)
    deterministic = True
    for P in polys[::7]:
        X = PolyhedralSpace(P)
        fs = facets_of(P)
        prog = DistanceProgram(X, fs[0].vertices)
        for y in P.vertices[:4]:
            deterministic &= prog.solve(y) == prog.solve(y)
        deterministic &= is_gl(X).reports == is_gl(X).reports
    backends = True
    if "compiled" in _backend.available():
        before = _backend.current()
        X = PolyhedralSpace(oct_rational())
        try:
            _backend.use_backend("python")
            slow = is_gl(X).reports
            _backend.use_backend("compiled")
            fast = is_gl(X).reports
        finally:
            _backend.use_backend(before)
        backends = slow == fast
    ok = involution and round_trip and deterministic and backends
    record(9, ok, f"{len(polys)} polytopes: involution={involution}, round-trip={round_trip}, "
                  f"determinism={deterministic}, backends agree={backends}; suite time "
                  f"limit {SUITE_LIMIT:.0f}s checked at session end")


if __name__ == "__main__":
    start = time.perf_counter()
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for fn in tests:
        try:
            fn()
        except AssertionError:
            failed += 1
    print(f"{len(tests) - failed}/{len(tests)} criteria passed in {time.perf_counter() - start:.1f}s")
    raise SystemExit(1 if failed else 0)
