"""Command-line front end.

Exit status: 0 when the checked property holds (or the command succeeded),
1 when it fails, 2 on input or usage errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from typing import Any, Callable

from . import polyfile
from .abs_sums import build_e_sum, is_glm, validate_absolute
from .corpus import CorpusSpec, fixture, generate
from .errors import InputError, ParseError, UnsupportedDimension
from .gl_analysis import (difference_body_check, is_gl, is_plump_facet,
                          rogers_shephard_audit)
from .normed_space import PolyhedralSpace, dist_point_to_polytope
from .planar import census_ok, classify_2d, segment_census
from .polytope import facets_of
from .rational import Vector, fmt

DEFAULT_MAX_DIM = 4
NE = "≠"


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return fmt(x)
    if isinstance(x, Vector):
        return [fmt(c) for c in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


class Report:
    """Collects text lines and a parallel structured record."""

    def __init__(self, command: str, digest: str):
        self.command = command
        self.digest = digest
        self.lines: list[str] = []
        self.data: dict[str, Any] = {}

    def line(self, text: str) -> None:
        self.lines.append(text)

    def render(self, fmt_: str, timing: float | None) -> str:
        if fmt_ == "json":
            record = {"command": self.command, "input_sha256": self.digest, **self.data}
            if timing is not None:
                record["seconds"] = round(timing, 6)
            return json.dumps(_jsonable(record), indent=2, sort_keys=True, ensure_ascii=False)
        out = [f"{self.command}  sha256 {self.digest}", *self.lines]
        if timing is not None:
            out.append(f"time {timing:.3f}s")
        return "\n".join(out)


def _load(source: str, max_dim: int):
    """A file path, ``-`` for stdin, or ``fixture:<name>``."""
    if source.startswith("fixture:"):
        P = fixture(source[len("fixture:"):])
        text = polyfile.emit(P)
    else:
        if source == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(source, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"cannot read {source}: {exc.strerror}") from None
        P = polyfile.parse(text)
    if P.dim > max_dim:
        raise UnsupportedDimension(f"dimension {P.dim} exceeds --max-dim {max_dim}")
    return P, text


def _digest(*texts: str) -> str:
    h = hashlib.sha256()
    for t in texts:
        h.update(t.encode("utf-8"))
    return h.hexdigest()


def _vec(text: str) -> Vector:
    try:
        return Vector(p for p in text.replace(",", " ").split())
    except InputError as exc:
        raise InputError(f"bad point {text!r}: {exc}") from None


# --------------------------------------------------------------------------
# commands; each returns (report, exit status)


def cmd_check_gl(args) -> tuple[Report, int]:
    P, text = _load(args.file, args.max_dim)
    X = PolyhedralSpace(P)
    v = is_gl(X, parallel=args.parallel)
    rep = Report("check-gl", _digest(text))
    total, good = len(v.reports), len(v.plump_facets)
    rep.line(f"GL: {'yes' if v.is_gl else 'no'}; {good}/{total} facets plump")
    witnesses = []
    for i, r in enumerate(v.reports):
        if r.plump:
            continue
        w = r.witness
        rep.line(f"facet {i} {r.facet.functional}, vertex {w.vertex}: "
                 f"dist {fmt(w.distance)} {NE} {fmt(w.bound)}")
        witnesses.append({"facet": i, "functional": r.facet.functional, "vertex": w.vertex,
                          "distance": w.distance, "bound": w.bound, "nearest": w.minimizer})
    rep.data = {"gl": v.is_gl, "facets": total, "plump": good, "witnesses": witnesses}
    return rep, 0 if v.is_gl else 1


def cmd_classify_2d(args) -> tuple[Report, int]:
    P, text = _load(args.file, args.max_dim)
    c = classify_2d(PolyhedralSpace(P))
    rep = Report("classify-2d", _digest(text))
    if c.basis:
        rep.line(f"class: {c.tag.value}; basis {c.basis[0]}, {c.basis[1]}")
    else:
        rep.line(f"class: {c.tag.value}")
    rep.data = {"class": c.tag.value, "basis": list(c.basis) if c.basis else None}
    return rep, 0 if c.is_gl else 1


def _glm_report(name: str, args, label: str) -> tuple[Report, int]:
    P, text = _load(args.file, args.max_dim)
    E = validate_absolute(P)
    v = is_glm(E, audit=getattr(args, "audit", False))
    rep = Report(name, _digest(text))
    rep.line(f"{label}: {'yes' if v.is_glm else 'no'}; "
             f"{len(v.results) - len(v.failures)}/{len(v.results)} extreme dual points monotone plump")
    rows = []
    for r in v.results:
        if not r.prefilter:
            rep.line(f"extreme dual point {r.functional} has coordinate outside {{0,±1}}")
        elif not r.monotone_plump:
            a, z = r.counterexample
            rep.line(f"extreme dual point {r.functional}: no b for a = {a}, z = {z}")
        if r.counterexample is not None and not r.prefilter:
            a, z = r.counterexample
            rep.line(f"  full procedure agrees: no b for a = {a}, z = {z}")
        rows.append({"functional": r.functional, "support": list(r.support),
                     "prefilter": r.prefilter, "monotone_plump": r.monotone_plump,
                     "counterexample": list(r.counterexample) if r.counterexample else None})
    rep.data = {label.lower(): v.is_glm, "functionals": rows}
    return rep, 0 if v.is_glm else 1


def cmd_check_glm(args):
    return _glm_report("check-glm", args, "GLM")


def cmd_check_glr(args):
    return _glm_report("check-glr", args, "GLR")


def cmd_build_sum(args) -> tuple[Report, int]:
    outer, otext = _load(args.outer, args.max_dim)
    loaded = [_load(f, args.max_dim) for f in args.components]
    E = validate_absolute(outer)
    S = build_e_sum(E, [P for P, _ in loaded])
    out_text = polyfile.emit(S.ball, args.rep)
    rep = Report("build-sum", _digest(otext, *(t for _, t in loaded)))
    rep.line(f"sum: dim {S.ball.dim}, {len(S.ball.vertices)} vertices, "
             f"{len(S.ball.functionals)} facets")
    rep.data = {"dim": S.ball.dim, "vertices": len(S.ball.vertices),
                "facets": len(S.ball.functionals)}
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out_text)
        rep.line(f"written to {args.output}")
    else:
        rep.lines.append(out_text.rstrip("\n"))
        rep.data["polytope"] = out_text
    return rep, 0


def cmd_audit(args) -> tuple[Report, int]:
    P, text = _load(args.file, args.max_dim)
    X = PolyhedralSpace(P)
    rep = Report("audit", _digest(text))
    ok = True
    bound_ok = True
    diff = {"passed": 0, "failed": 0, "skipped": 0}
    for F in facets_of(P):
        r = is_plump_facet(X, F)
        if any(rec.distance < rec.bound for rec in r.records):
            bound_ok = False
        res = difference_body_check(X, F, r)
        diff["skipped" if res is None else ("passed" if res else "failed")] += 1
    ok &= bound_ok and diff["failed"] == 0
    rep.line(f"lower bound dist >= 1 - x*(y): {'ok' if bound_ok else 'VIOLATED'}")
    rep.line(f"difference body: {diff['passed']} passed, {diff['failed']} failed, "
             f"{diff['skipped']} skipped (not plump)")
    rs = []
    bodies = [("ball", P)] if P.dim <= 3 else []
    if P.dim - 1 <= 3:
        bodies += [(f"facet {F.functional}", F.polytope()) for F in facets_of(P)[:2]]
    for name, K in bodies:
        lhs, rhs, good = rogers_shephard_audit(K)
        ok &= good
        rep.line(f"Rogers-Shephard {name}: {fmt(lhs)} <= {fmt(rhs)} {'ok' if good else 'FAILED'}")
        rs.append({"body": name, "lhs": lhs, "rhs": rhs, "ok": good})
    rep.data = {"lower_bound": bound_ok, "difference_body": diff, "rogers_shephard": rs}
    if P.dim == 2:
        census = segment_census(X)
        good = census_ok(census)
        ok &= good
        rep.line("segment census: " + ", ".join(fmt(e.length) for e in census)
                 + ("" if good else " VIOLATED"))
        rep.data["segment_census"] = [e.length for e in census]
    rep.data["ok"] = ok
    return rep, 0 if ok else 1


def cmd_gen(args) -> tuple[Report, int]:
    spec = CorpusSpec(args.kind, args.seed, args.pairs, args.max_den, args.name, args.dim)
    P = generate(spec)
    out_text = polyfile.emit(P, args.rep)
    rep = Report("gen", _digest(repr(spec)))
    rep.data = {"spec": {"kind": spec.kind, "seed": spec.seed, "pairs": spec.pairs,
                         "max_den": spec.max_den, "name": spec.name, "dim": spec.dim}}
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out_text)
        rep.line(f"written to {args.output}")
    else:
        rep.lines.append(out_text.rstrip("\n"))
        rep.data["polytope"] = out_text
    return rep, 0


def cmd_distance(args) -> tuple[Report, int]:
    P, text = _load(args.file, args.max_dim)
    X = PolyhedralSpace(P)
    facets = facets_of(P)
    if not 0 <= args.facet < len(facets):
        raise InputError(f"facet index {args.facet} outside 0..{len(facets) - 1}")
    F = facets[args.facet]
    y = _vec(args.point)
    if len(y) != P.dim:
        raise InputError(f"point of dimension {len(y)} for a {P.dim}-dimensional ball")
    dist, a = dist_point_to_polytope(X, y, F.vertices)
    rep = Report("distance", _digest(text, args.point, str(args.facet)))
    rep.line(f"dist({y}, facet {args.facet} {F.functional}) = {fmt(dist)} at {a}")
    rep.data = {"point": y, "facet": args.facet, "functional": F.functional,
                "distance": dist, "nearest": a}
    return rep, 0


COMMANDS: dict[str, Callable] = {
    "check-gl": cmd_check_gl,
    "classify-2d": cmd_classify_2d,
    "check-glm": cmd_check_glm,
    "check-glr": cmd_check_glr,
    "build-sum": cmd_build_sum,
    "audit": cmd_audit,
    "gen": cmd_gen,
    "distance": cmd_distance,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--parallel", action="store_true", help="check facets in parallel")
    common.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)
    common.add_argument("--timing", action="store_true", help="append wall-clock time")

    parser = argparse.ArgumentParser(prog="glspace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    src = "polytope file, '-' for stdin, or fixture:<name>"

    p = sub.add_parser("check-gl", parents=[common], help="decide the GL property")
    p.add_argument("file", help=src)
    p = sub.add_parser("classify-2d", parents=[common], help="classify a GL plane")
    p.add_argument("file", help=src)
    for name in ("check-glm", "check-glr"):
        p = sub.add_parser(name, parents=[common], help="GL-monotone test of an absolute norm")
        p.add_argument("file", help=src)
        p.add_argument("--audit", action="store_true",
                       help="run the full procedure even after a prefilter failure")
    p = sub.add_parser("build-sum", parents=[common], help="E-sum of polyhedral spaces")
    p.add_argument("outer", help=src)
    p.add_argument("components", nargs="+", help=src)
    p.add_argument("-o", "--output")
    p.add_argument("--rep", choices=("vrep", "hrep"), default="vrep")
    p = sub.add_parser("audit", parents=[common], help="distance, difference-body and volume audits")
    p.add_argument("file", help=src)
    p = sub.add_parser("gen", parents=[common], help="emit a corpus polytope")
    p.add_argument("kind", choices=("fixture", "polygon", "polytope3", "absolute"))
    p.add_argument("--name")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pairs", type=int, default=4)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--max-den", type=int, default=16)
    p.add_argument("-o", "--output")
    p.add_argument("--rep", choices=("vrep", "hrep"), default="vrep")
    p = sub.add_parser("distance", parents=[common], help="distance from a point to a facet")
    p.add_argument("file", help=src)
    p.add_argument("--point", required=True, help="comma-separated rationals")
    p.add_argument("--facet", type=int, required=True, help="index in canonical facet order")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report, status = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: parse error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start if args.timing else None
    print(report.render(args.format, elapsed))
    return status


if __name__ == "__main__":
    sys.exit(main())
