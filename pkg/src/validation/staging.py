"""
Equations implied by the sketch structure.
Path: src/validation/staging.py

Each generator returns Staged records (label, supporting literals, one
equation). The theorem rules turn them into graph steps.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Set, Tuple

import sympy

from src.algebra import Equation, SymbolTable, length, measure, quantity_symbol, to_sympy
from src.formal_lang import Literal, Point, collect_points

from .arguments import well_typed
from .sketch import Chain, GeometrySketch

SEGMENT_SPLIT = "Line Segment Split"
SAME_ANGLE = "Same Angle"
RADIUS_DEFINITION = "Radius Definition"
DIAMETER_DEFINITION = "Diameter Definition"
VERTICAL_ANGLES = "Vertical Angle Theorem"


@dataclass(frozen=True)
class Staged:
    rule: str
    premises: Tuple[Literal, ...]
    equation: Equation


def support(chain: Chain, *names: str) -> Tuple[Literal, ...]:
    """Smallest witness set for names lying on chain: one covering source if any."""
    wanted = set(names)
    for source in chain.sources:
        if wanted <= collect_points(source):
            return (source,)
    return chain.witnesses(*names)


def split_equations(sketch: GeometrySketch, table: Optional[SymbolTable] = None) -> List[Staged]:
    """AB = AM + MB for every M strictly between A and B on a chain."""
    out = []
    for chain in sketch.lines:
        if len(chain.points) < 3:
            continue
        for a, b in combinations(sorted(chain.points), 2):
            for m in sorted(chain.points):
                if m in (a, b) or not sketch.between(m, a, b):
                    continue
                eq = Equation(length(a, b, table), length(a, m, table) + length(m, b, table))
                out.append(Staged(SEGMENT_SPLIT, support(chain, m, a, b), eq))
    return out


def _arm_support(sketch: GeometrySketch, v: str, p: str, q: str) -> Tuple[Literal, ...]:
    if p == q:
        return ()
    return support(sketch.chain(v, p, q), v, p, q)


def same_angle(sketch: GeometrySketch, first: Sequence[str], second: Sequence[str]) -> Optional[Tuple[Literal, ...]]:
    """Witnesses that two angle triples name the same angle, or None."""
    a, v, b = first
    c, w, d = second
    if v != w or tuple(first) == tuple(second):
        return None
    for p, q in ((c, d), (d, c)):
        if sketch.same_ray(v, a, p) and sketch.same_ray(v, b, q):
            return _arm_support(sketch, v, a, p) + _arm_support(sketch, v, b, q)
    return None


def same_angle_equations(sketch: GeometrySketch, angle: Sequence[str],
                         table: Optional[SymbolTable] = None) -> List[Staged]:
    """One-arm extensions of an angle along its collinear rays."""
    a, v, b = angle
    out = []
    for fixed, moving in ((b, a), (a, b)):
        for p in sketch.ray(v, moving):
            if p == moving or p == fixed:
                continue
            witnesses = _arm_support(sketch, v, moving, p)
            other = (p, v, fixed) if moving == a else (fixed, v, p)
            eq = Equation(measure(a, v, b, table), measure(*other, table))
            out.append(Staged(SAME_ANGLE, witnesses, eq))
    return out


def radius_expression(sketch: GeometrySketch, center: str, table: Optional[SymbolTable] = None) -> sympy.Expr:
    """Declared radius of the circle at center, else its RadiusOf quantity."""
    info = sketch.circles.get(center)
    if info is not None and info.radius is not None:
        return to_sympy(info.radius, table)
    return quantity_symbol(Literal("RadiusOf", (Literal("Circle", (Point(center),)),)), table)


def radius_equations(sketch: GeometrySketch, table: Optional[SymbolTable] = None) -> List[Staged]:
    """OA = r for every point A on circle O."""
    out = []
    for center in sorted(sketch.circles):
        info = sketch.circles[center]
        r = radius_expression(sketch, center, table)
        for p in sorted(info.points):
            if p == center:
                continue
            sources = tuple(s for s in info.sources if s.args[0] == Point(p))
            out.append(Staged(RADIUS_DEFINITION, sources[:1], Equation(length(center, p, table), r)))
    return out


def diameter_equations(sketch: GeometrySketch, table: Optional[SymbolTable] = None) -> List[Staged]:
    """AB = 2r for every declared diameter AB."""
    out = []
    for lit in sketch.all_literals():
        if lit.predicate != "IsDiameterOf" or not well_typed(lit):
            continue
        segment, circle = lit.args
        a, b = segment.point_names()
        center = circle.args[0].name
        r = radius_expression(sketch, center, table)
        out.append(Staged(DIAMETER_DEFINITION, (lit,), Equation(length(a, b, table), 2 * r)))
    return out


def vertical_angle_equations(sketch: GeometrySketch, table: Optional[SymbolTable] = None,
                             mentioned: Optional[Set[sympy.Symbol]] = None) -> List[Staged]:
    """
    Opposite angles at proper crossings are equal.

    Args:
        mentioned: Keep only equations touching at least one of these angle symbols
    """
    out = []
    for e, c1, c2 in sketch.crossings():
        first = [(a, b) for a, b in combinations(sorted(c1.points), 2) if sketch.between(e, a, b)]
        second = [(c, d) for c, d in combinations(sorted(c2.points), 2) if sketch.between(e, c, d)]
        for a, b in first:
            for c, d in second:
                witnesses = support(c1, e, a, b) + support(c2, e, c, d)
                for lhs, rhs in ((measure(a, e, c, table), measure(b, e, d, table)),
                                 (measure(a, e, d, table), measure(b, e, c, table))):
                    if mentioned is not None and not ({lhs, rhs} & mentioned):
                        continue
                    out.append(Staged(VERTICAL_ANGLES, witnesses, Equation(lhs, rhs)))
    return out


def staged_equations(sketch: GeometrySketch, table: Optional[SymbolTable] = None,
                     angles: Iterable[Sequence[str]] = ()) -> List[Staged]:
    """Every staged equation of the completion rule set for the given angles."""
    out = split_equations(sketch, table)
    for angle in angles:
        out.extend(same_angle_equations(sketch, angle, table))
    out.extend(radius_equations(sketch, table))
    out.extend(diameter_equations(sketch, table))
    out.extend(vertical_angle_equations(sketch, table))
    return out
