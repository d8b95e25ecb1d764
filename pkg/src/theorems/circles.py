"""
Circle rules: radii, diameters, chords, arcs, inscribed angles, tangents.
Path: src/theorems/circles.py
"""
from itertools import combinations
from typing import List, Optional, Tuple

import sympy

from src.algebra import Equation
from src.formal_lang import Literal, Point, apply, line
from src.validation.staging import diameter_equations, radius_equations, radius_expression

from .rule import TheoremRule, theorem

RULES: List[TheoremRule] = []


def _circle(center: str) -> Literal:
    return Literal("Circle", (Point(center),))


def _memberships(ctx, center: str, *names: str) -> Optional[Tuple[str, ...]]:
    keys = []
    for n in names:
        key = ctx.membership(n, center)
        if key is None:
            return None
        keys.append(key)
    return tuple(keys)


def _common_center(ctx, *names: str) -> Optional[str]:
    """The unique circle through all named points."""
    centers = set(ctx.sketch.on_circle(names[0]))
    for n in names[1:]:
        centers &= set(ctx.sketch.on_circle(n))
    centers -= set(names)
    return next(iter(centers)) if len(centers) == 1 else None


def _tangent_lines(ctx):
    """(key, segment, center) of every Tangent literal."""
    for key, lit in ctx.literal_nodes("Tangent"):
        segment, circle = lit.args
        if isinstance(segment, Literal) and segment.predicate == "Line" \
                and isinstance(circle, Literal) and circle.predicate == "Circle":
            yield key, tuple(segment.point_names()), circle.args[0].name


def _tangent_point(ctx, segment, center) -> Optional[str]:
    on = [p for p in ctx.sketch.line_points(segment) if center in ctx.sketch.on_circle(p)]
    return on[0] if len(on) == 1 else None


@theorem(RULES, "Radius Definition",
         "Every point on a circle is one radius away from its center.")
def radius_definition(ctx, m):
    yield from ctx.staged(radius_equations(ctx.sketch, ctx.table))


@theorem(RULES, "Circle Radius Definition",
         "A declared radius OA of circle O has the length of the radius.")
def circle_radius(ctx, m):
    for key, lit in ctx.literal_nodes("IsRadiusOf"):
        segment, circle = lit.args
        if not isinstance(circle, Literal) or circle.predicate != "Circle":
            continue
        center = circle.args[0].name
        a, b = segment.point_names()
        yield (key,), [Equation(ctx.L(a, b), radius_expression(ctx.sketch, center, ctx.table))]


@theorem(RULES, "Diameter Definition",
         "A diameter is twice the radius long.")
def diameter_definition(ctx, m):
    yield from ctx.staged(diameter_equations(ctx.sketch, ctx.table))


@theorem(RULES, "Diameter Radius Relation",
         "The diameter of a circle is twice its radius.")
def diameter_radius(ctx, m):
    for center in sorted(ctx.sketch.circles):
        diameter = ctx.Q(Literal("DiameterOf", (_circle(center),)))
        key = ctx.circle_key(center)
        if diameter in ctx.mentioned and key is not None:
            yield (key,), [Equation(diameter, 2 * radius_expression(ctx.sketch, center, ctx.table))]


@theorem(RULES, "Perpendicular Chord Bisection",
         "A line through the center perpendicular to a chord bisects the chord.")
def chord_bisection(ctx, m):
    sketch = ctx.sketch
    for key, lit in ctx.literal_nodes("Perpendicular"):
        segments = [tuple(a.point_names()) for a in lit.args if isinstance(a, Literal) and a.predicate == "Line"]
        if len(segments) != 2:
            continue
        for radial, chord in (segments, segments[::-1]):
            foot = sketch.intersection(radial, chord)
            if foot is None:
                continue
            for a, b in combinations(sketch.line_points(chord), 2):
                center = _common_center(ctx, a, b)
                if center is None or center == foot or not sketch.between(foot, a, b):
                    continue
                keys = (_memberships(ctx, center, a, b), ctx.support(center, foot, *radial),
                        ctx.support(foot, a, b))
                if None in keys:
                    continue
                yield (key,) + sum(keys, ()), [Equation(ctx.L(a, foot), ctx.L(foot, b))]


@theorem(RULES, "Arc Measure Definition",
         "The measure of a minor arc equals its central angle.")
def arc_measure(ctx, m):
    for symbol in sorted(ctx.mentioned, key=lambda s: s.name):
        origin = ctx.table.origin(symbol)
        if origin is None or origin.predicate != "MeasureOf":
            continue
        arc = origin.args[0]
        if not (isinstance(arc, Literal) and arc.predicate == "Arc" and len(arc.args) == 2):
            continue
        a, b = arc.point_names()
        center = _common_center(ctx, a, b)
        if center is None or ctx.sketch.collinear(a, center, b):
            continue
        keys = _memberships(ctx, center, a, b)
        if keys:
            yield keys, [Equation(symbol, ctx.A(a, center, b))]


@theorem(RULES, "Inscribed Angle Theorem",
         "An inscribed angle is half the arc it subtends.")
def inscribed_angle(ctx, m):
    for a, v, c in ctx.mentioned_angles():
        center = _common_center(ctx, a, v, c)
        # a diameter chord is Thales' case
        if center is None or ctx.sketch.collinear(a, center, c):
            continue
        keys = _memberships(ctx, center, a, v, c)
        if not keys:
            continue
        angle = ctx.A(a, v, c)
        arc = ctx.Q(Literal("MeasureOf", (Literal("Arc", (Point(a), Point(c))),)))
        conclusions = [Equation(angle, arc / 2)]
        central = ctx.A(a, center, c)
        if central in ctx.mentioned:
            conclusions.append(Equation(angle, central / 2))
        yield keys, conclusions


@theorem(RULES, "Thales Theorem",
         "An angle inscribed in a semicircle is a right angle.")
def thales(ctx, m):
    sketch = ctx.sketch
    for a, v, c in ctx.mentioned_angles():
        center = _common_center(ctx, a, v, c)
        if center is None or not sketch.between(center, a, c):
            continue
        keys = _memberships(ctx, center, a, v, c)
        support = ctx.support(center, a, c)
        if keys and support is not None:
            yield keys + support, [Equation(ctx.A(a, v, c), 90)]


@theorem(RULES, "Tangent Radius Perpendicular",
         "A tangent is perpendicular to the radius at the point of tangency.")
def tangent_radius(ctx, m):
    for key, segment, center in _tangent_lines(ctx):
        t = _tangent_point(ctx, segment, center)
        if t is None:
            continue
        other = next((p for p in segment if p != t), None)
        membership = ctx.membership(t, center)
        if other is None or membership is None:
            continue
        yield (key, membership), [apply("Perpendicular", line(center, t), line(other, t))]


@theorem(RULES, "Tangent Segment Theorem",
         "Tangent segments from one external point to a circle are equal.")
def tangent_segments(ctx, m):
    tangents = []
    for key, segment, center in _tangent_lines(ctx):
        t = _tangent_point(ctx, segment, center)
        if t is not None and t in segment:
            outside = next(p for p in segment if p != t)
            tangents.append((key, center, outside, t))
    for (k1, c1, p1, t1), (k2, c2, p2, t2) in combinations(tangents, 2):
        if c1 == c2 and p1 == p2 and t1 != t2:
            yield (k1, k2), [Equation(ctx.L(p1, t1), ctx.L(p2, t2))]


@theorem(RULES, "Cyclic Quadrilateral Theorem",
         "Opposite angles of a quadrilateral inscribed in a circle sum to 180.")
def cyclic_quadrilateral(ctx, m):
    for poly, key in ctx.polygons():
        p = tuple(poly.point_names())
        if len(p) != 4:
            continue
        center = _common_center(ctx, *p)
        if center is None:
            continue
        keys = _memberships(ctx, center, *p)
        angles = ctx.interior_angles(p)
        if keys and ctx.mentions(*angles):
            yield (key,) + keys, [Equation(angles[0] + angles[2], 180), Equation(angles[1] + angles[3], 180)]


@theorem(RULES, "Circle Area Formula",
         "The area of a circle is pi times the square of its radius.")
def circle_area(ctx, m):
    for center in sorted(ctx.sketch.circles):
        area = ctx.Q(Literal("AreaOf", (_circle(center),)))
        key = ctx.circle_key(center)
        if area in ctx.mentioned and key is not None:
            r = radius_expression(ctx.sketch, center, ctx.table)
            yield (key,), [Equation(area, sympy.pi * r ** 2)]


@theorem(RULES, "Circumference Formula",
         "The circumference of a circle is 2 * pi times its radius.")
def circumference(ctx, m):
    for center in sorted(ctx.sketch.circles):
        total = ctx.Q(Literal("CircumferenceOf", (_circle(center),)))
        key = ctx.circle_key(center)
        if total in ctx.mentioned and key is not None:
            r = radius_expression(ctx.sketch, center, ctx.table)
            yield (key,), [Equation(total, 2 * sympy.pi * r)]


@theorem(RULES, "Sector Area Formula",
         "A sector with central angle t has area t / 360 of its circle.")
def sector_area(ctx, m):
    for symbol in sorted(ctx.mentioned, key=lambda s: s.name):
        origin = ctx.table.origin(symbol)
        if origin is None or origin.predicate != "AreaOf":
            continue
        sector = origin.args[0]
        if not (isinstance(sector, Literal) and sector.predicate == "Sector"):
            continue
        o, a, b = sector.point_names()
        key = ctx.circle_key(o)
        if key is None:
            continue
        r = radius_expression(ctx.sketch, o, ctx.table)
        yield (key,), [Equation(symbol, ctx.A(a, o, b) / 360 * sympy.pi * r ** 2)]
