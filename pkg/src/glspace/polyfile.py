"""Plain-text polytope format.

    # optional comments
    polytope
    dim 2
    vrep            (or hrep: one facet functional d per row, d.x <= 1)
    1 0
    1/2 1
    ...
    end
"""
from __future__ import annotations

from .errors import GeometryError, InputError, ParseError
from .polytope import SymmetricPolytope, from_halfspaces, from_vertices
from .rational import fmt, to_rational


def emit(P: SymmetricPolytope, rep: str = "vrep") -> str:
    if rep not in ("vrep", "hrep"):
        raise InputError(f"unknown representation {rep!r}")
    rows = P.vertices if rep == "vrep" else P.functionals
    lines = ["polytope", f"dim {P.dim}", rep]
    lines += [" ".join(fmt(x) for x in r) for r in rows]
    lines.append("end")
    return "\n".join(lines) + "\n"


def _tokens(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse(text: str) -> SymmetricPolytope:
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty input")
    it = iter(lines)

    def expect(what: str):
        try:
            return next(it)
        except StopIteration:
            raise ParseError(f"unexpected end of input, expected {what}") from None

    no, line = expect("'polytope'")
    if line != "polytope":
        raise ParseError(f"expected 'polytope', got {line!r}", no)
    no, line = expect("'dim <n>'")
    parts = line.split()
    if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise ParseError(f"expected 'dim <n>' with n >= 1, got {line!r}", no)
    dim = int(parts[1])
    no, rep = expect("'vrep' or 'hrep'")
    if rep not in ("vrep", "hrep"):
        raise ParseError(f"expected 'vrep' or 'hrep', got {rep!r}", no)
    rows = []
    first = no
    while True:
        no, line = expect("a row or 'end'")
        if line == "end":
            break
        fields = line.split()
        if len(fields) != dim:
            raise ParseError(f"row has {len(fields)} entries, expected {dim}", no)
        try:
            rows.append([to_rational(f) for f in fields])
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ParseError(f"bad rational in row: {exc}", no) from None
    extra = next(it, None)
    if extra is not None:
        raise ParseError(f"trailing content after 'end': {extra[1]!r}", extra[0])
    if not rows:
        raise ParseError("no rows", first)
    try:
        if rep == "vrep":
            return from_vertices(dim, rows)
        return from_halfspaces(dim, rows)
    except GeometryError as exc:
        raise ParseError(str(exc), first) from None


def read(path) -> SymmetricPolytope:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write(path, P: SymmetricPolytope, rep: str = "vrep") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit(P, rep))
