"""
Structural consistency checks over a sketch.
Path: src/validation/consistency.py
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import sympy

from src.algebra import ConversionError, SymbolTable, parse_expression
from src.formal_lang import Literal, Point, print_literal, walk

from .sketch import GeometrySketch
from .staging import support

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Conflict:
    """Literals that cannot hold together; the first one is the one reported against"""
    literals: Tuple[Literal, ...]
    message: str


def _lines_of(rel: Literal) -> List[List[str]]:
    if not all(isinstance(a, Literal) and a.predicate == "Line" for a in rel.args):
        return []
    return [a.point_names() for a in rel.args]


def _polygon_conflicts(sketch: GeometrySketch) -> List[Conflict]:
    out = []
    for poly in sketch.polygons:
        source = sketch.polygon_sources.get(poly, poly)
        names = poly.point_names()
        repeated = sorted({n for n in names if names.count(n) > 1})
        if repeated:
            out.append(Conflict((source,), f"repeated vertex {', '.join(repeated)}"))
            continue
        reported = set()
        n = len(names)
        for i in range(n):
            triple = (names[i - 1], names[i], names[(i + 1) % n])
            key = frozenset(triple)
            if key in reported or not sketch.collinear(*triple):
                continue
            reported.add(key)
            chain = sketch.chain(*triple)
            witnesses = tuple(w for w in support(chain, *triple) if w != source)
            out.append(Conflict((source,) + witnesses, f"vertices {', '.join(sorted(triple))} are collinear"))
    return out


def _line_relation_conflicts(sketch: GeometrySketch) -> List[Conflict]:
    out = []
    parallels: Dict[Tuple[int, int], Literal] = {}
    perpendiculars: Dict[Tuple[int, int], Literal] = {}
    for rel in sketch.facts:
        segments = _lines_of(rel) if rel.predicate in ("Parallel", "Perpendicular") else []
        if len(segments) != 2:
            continue
        c1, c2 = sketch.chain(*segments[0]), sketch.chain(*segments[1])
        if c1 is None or c2 is None:
            continue
        key = tuple(sorted((sketch.lines.index(c1), sketch.lines.index(c2))))
        if rel.predicate == "Parallel":
            shared = sorted(set(c1.points) & set(c2.points))
            if c1 is not c2 and shared:
                out.append(Conflict((rel,), f"parallel lines share point {shared[0]} but are different lines"))
            parallels.setdefault(key, rel)
        else:
            if c1 is c2:
                out.append(Conflict((rel,) + c1.sources, "perpendicular lines lie on one line"))
            perpendiculars.setdefault(key, rel)
    for key in sorted(set(parallels) & set(perpendiculars)):
        out.append(Conflict((parallels[key], perpendiculars[key]), "lines cannot be both parallel and perpendicular"))
    return out


def _radius_conflicts(sketch: GeometrySketch) -> List[Conflict]:
    table = SymbolTable()
    radii: Dict[str, Dict[sympy.Expr, Literal]] = {}
    for lit in sketch.facts:
        for inner in walk(lit):
            if inner.predicate != "Circle" or len(inner.args) != 2 or not isinstance(inner.args[0], Point):
                continue
            try:
                value = parse_expression(str(inner.args[1]), table)
            except ConversionError:
                continue
            if value.free_symbols:
                continue
            radii.setdefault(inner.args[0].name, {}).setdefault(sympy.nsimplify(value), lit)
    out = []
    for center in sorted(radii):
        values = radii[center]
        if len(values) > 1:
            ordered = sorted(values, key=float)
            literals = tuple(values[v] for v in ordered)
            text = " and ".join(str(v) for v in ordered)
            out.append(Conflict(literals, f"circle {center} has radii {text}"))
    return out


def _endpoint_conflicts(sketch: GeometrySketch) -> List[Conflict]:
    out = []
    for lit in sketch.facts:
        if lit.predicate == "PointLiesOnLine" and isinstance(lit.args[0], Point) \
                and isinstance(lit.args[1], Literal):
            if lit.args[0].name in lit.args[1].point_names():
                out.append(Conflict((lit,), f"{lit.args[0].name} is an endpoint of {print_literal(lit.args[1])}"))
    return out


def _order_conflicts(sketch: GeometrySketch) -> List[Conflict]:
    out = []
    for chain in sketch.impossible:
        declared = tuple(s for s in chain.sources if s.predicate in ("PointLiesOnLine", "IsMidpointOf"))
        out.append(Conflict(declared or chain.sources,
                            f"points {', '.join(chain.points)} cannot be ordered on one line"))
    return out


def check_consistency(sketch: GeometrySketch) -> List[Conflict]:
    """
    Every structural violation of the sketch, sorted and deduplicated.

    Numeric contradictions are left to the solver.
    """
    found = (_polygon_conflicts(sketch) + _line_relation_conflicts(sketch) + _radius_conflicts(sketch)
             + _endpoint_conflicts(sketch) + _order_conflicts(sketch))
    unique = {(tuple(print_literal(l) for l in c.literals), c.message): c for c in found}
    conflicts = [unique[k] for k in sorted(unique)]
    for c in conflicts:
        logger.info("inconsistent: %s", c.message)
    return conflicts
