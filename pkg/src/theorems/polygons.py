"""
Quadrilateral and polygon rules, area and perimeter formulas.
Path: src/theorems/polygons.py
"""
from typing import Iterator, List, Sequence, Tuple

import sympy

from src.algebra import Equation
from src.formal_lang import Literal, Point, apply, line

from .rule import TheoremRule, theorem

RULES: List[TheoremRule] = []


def _cycle(poly: Literal) -> Tuple[str, ...]:
    return tuple(poly.point_names())


def _figure(predicate: str, p: Sequence[str]) -> Literal:
    return apply(predicate, *(Point(n) for n in p))


def _diagonal_crossing(ctx, p0, p1, p2, p3):
    """(E, premise keys) when the diagonals p0p2 and p1p3 cross at a named point."""
    sketch = ctx.sketch
    e = sketch.intersection((p0, p2), (p1, p3))
    if e is None or not (sketch.between(e, p0, p2) and sketch.between(e, p1, p3)):
        return None
    first, second = ctx.support(e, p0, p2), ctx.support(e, p1, p3)
    if first is None or second is None:
        return None
    return e, first + second


def _heights(ctx, base: Tuple[str, str], apexes: Sequence[str]) -> Iterator[Tuple[str, str, Tuple[str, ...]]]:
    """(apex, foot, premise keys) for right-angle feet of apexes on the line through base."""
    for v in apexes:
        for h in ctx.sketch.line_points(base):
            if h == v:
                continue
            for x in ctx.sketch.line_points(base):
                if x in (h, v):
                    continue
                known = ctx.value(ctx.A(v, h, x))
                if known is None or known[0] != 90:
                    continue
                on_line = ctx.support(h, *base)
                if on_line is not None:
                    yield v, h, (known[1],) + on_line
                break


@theorem(RULES, "Polygon Interior Angle Sum",
         "The interior angles of an n-gon sum to (n - 2) * 180.")
def interior_angle_sum(ctx, m):
    for poly, key in ctx.polygons():
        p = _cycle(poly)
        if len(p) < 4:
            continue
        angles = ctx.interior_angles(p)
        if ctx.mentions(*angles):
            yield (key,), [Equation(sum(angles), (len(p) - 2) * 180)]


@theorem(RULES, "Regular Polygon Properties",
         "A regular n-gon has equal sides and interior angles of (n - 2) * 180 / n.")
def regular_polygon(ctx, m):
    for key, lit in ctx.literal_nodes("Regular"):
        poly = lit.args[0]
        if not isinstance(poly, Literal):
            continue
        p = _cycle(poly)
        n = len(p)
        sides = ctx.sides(p)
        angle = sympy.Rational((n - 2) * 180, n)
        yield (key,), [Equation(s, sides[0]) for s in sides[1:]] + [Equation(a, angle) for a in ctx.interior_angles(p)]


@theorem(RULES, "Equilateral Polygon Definition",
         "An equilateral polygon has all sides equal.")
def equilateral_polygon(ctx, m):
    for key, lit in ctx.literal_nodes("Equilateral"):
        poly = lit.args[0]
        if not isinstance(poly, Literal) or poly.predicate == "Triangle":
            continue
        sides = ctx.sides(_cycle(poly))
        yield (key,), [Equation(s, sides[0]) for s in sides[1:]]


@theorem(RULES, "Parallelogram Properties",
         "A parallelogram has parallel and equal opposite sides, equal opposite angles, "
         "supplementary consecutive angles and diagonals that bisect each other.")
def parallelogram(ctx, m):
    for poly, key in ctx.polygons("Parallelogram"):
        p0, p1, p2, p3 = _cycle(poly)
        a = ctx.interior_angles((p0, p1, p2, p3))
        yield (key,), [
            Equation(ctx.L(p0, p1), ctx.L(p2, p3)),
            Equation(ctx.L(p1, p2), ctx.L(p3, p0)),
            Equation(a[0], a[2]),
            Equation(a[1], a[3]),
            Equation(a[0] + a[1], 180),
            apply("Parallel", line(p0, p1), line(p2, p3)),
            apply("Parallel", line(p1, p2), line(p3, p0)),
        ]
        crossing = _diagonal_crossing(ctx, p0, p1, p2, p3)
        if crossing is not None:
            e, keys = crossing
            yield (key,) + keys, [Equation(ctx.L(p0, e), ctx.L(e, p2)), Equation(ctx.L(p1, e), ctx.L(e, p3))]


@theorem(RULES, "Rectangle Properties",
         "A rectangle is a parallelogram with right angles and equal diagonals.")
def rectangle(ctx, m):
    for poly, key in ctx.polygons("Rectangle"):
        p = _cycle(poly)
        yield (key,), [_figure("Parallelogram", p), Equation(ctx.L(p[0], p[2]), ctx.L(p[1], p[3]))] + \
            [Equation(a, 90) for a in ctx.interior_angles(p)]


@theorem(RULES, "Rhombus Properties",
         "A rhombus is a parallelogram with equal sides and perpendicular diagonals that bisect its angles.")
def rhombus(ctx, m):
    for poly, key in ctx.polygons("Rhombus"):
        p = _cycle(poly)
        sides = ctx.sides(p)
        conclusions = [_figure("Parallelogram", p), apply("Perpendicular", line(p[0], p[2]), line(p[1], p[3]))]
        conclusions += [Equation(s, sides[0]) for s in sides[1:]]
        for i in range(4):
            prev, v, nxt, opposite = p[i - 1], p[i], p[(i + 1) % 4], p[(i + 2) % 4]
            conclusions.append(Equation(ctx.A(prev, v, opposite), ctx.A(opposite, v, nxt)))
        yield (key,), conclusions


@theorem(RULES, "Square Properties",
         "A square is both a rectangle and a rhombus.")
def square(ctx, m):
    for poly, key in ctx.polygons("Square"):
        p = _cycle(poly)
        yield (key,), [_figure("Rectangle", p), _figure("Rhombus", p)]


@theorem(RULES, "Kite Diagonals Perpendicular",
         "The diagonals of a kite are perpendicular.")
def kite(ctx, m):
    for poly, key in ctx.polygons("Kite"):
        p = _cycle(poly)
        yield (key,), [apply("Perpendicular", line(p[0], p[2]), line(p[1], p[3]))]


def _area(ctx, poly: Literal) -> sympy.Symbol:
    return ctx.Q(Literal("AreaOf", (poly,)))


@theorem(RULES, "Triangle Area Formula",
         "The area of a triangle is half its base times its height.")
def triangle_area(ctx, m):
    for poly, key in ctx.polygons("Triangle"):
        area = _area(ctx, poly)
        if area not in ctx.mentioned:
            continue
        p = _cycle(poly)
        for v in p:
            u, w = (x for x in p if x != v)
            for apex, foot, keys in _heights(ctx, (u, w), (v,)):
                yield (key,) + keys, [Equation(area, ctx.L(u, w) * ctx.L(apex, foot) / 2)]


@theorem(RULES, "Right Triangle Area Formula",
         "The area of a right triangle is half the product of its legs.")
def right_triangle_area(ctx, m):
    for poly, key in ctx.polygons("Triangle"):
        area = _area(ctx, poly)
        if area not in ctx.mentioned:
            continue
        p = _cycle(poly)
        for c in p:
            a, b = (x for x in p if x != c)
            known = ctx.value(ctx.A(a, c, b))
            if known is not None and known[0] == 90:
                yield (key, known[1]), [Equation(area, ctx.L(a, c) * ctx.L(b, c) / 2)]


@theorem(RULES, "Rectangle Area Formula",
         "The area of a rectangle is the product of two adjacent sides.")
def rectangle_area(ctx, m):
    for poly, key in ctx.polygons("Rectangle"):
        area = _area(ctx, poly)
        if area in ctx.mentioned:
            p = _cycle(poly)
            yield (key,), [Equation(area, ctx.L(p[0], p[1]) * ctx.L(p[1], p[2]))]


@theorem(RULES, "Square Area Formula",
         "The area of a square is the square of its side.")
def square_area(ctx, m):
    for poly, key in ctx.polygons("Square"):
        area = _area(ctx, poly)
        if area in ctx.mentioned:
            p = _cycle(poly)
            yield (key,), [Equation(area, ctx.L(p[0], p[1]) ** 2)]


@theorem(RULES, "Rhombus Area Formula",
         "The area of a rhombus is half the product of its diagonals.")
def rhombus_area(ctx, m):
    for poly, key in ctx.polygons("Rhombus", "Kite"):
        area = _area(ctx, poly)
        if area in ctx.mentioned:
            p = _cycle(poly)
            yield (key,), [Equation(area, ctx.L(p[0], p[2]) * ctx.L(p[1], p[3]) / 2)]


@theorem(RULES, "Parallelogram Area Formula",
         "The area of a parallelogram is its base times its height.")
def parallelogram_area(ctx, m):
    for poly, key in ctx.polygons("Parallelogram", "Rhombus"):
        area = _area(ctx, poly)
        if area not in ctx.mentioned:
            continue
        p = _cycle(poly)
        for i in range(4):
            base = (p[i], p[(i + 1) % 4])
            for apex, foot, keys in _heights(ctx, base, (p[(i + 2) % 4], p[(i + 3) % 4])):
                yield (key,) + keys, [Equation(area, ctx.L(*base) * ctx.L(apex, foot))]


@theorem(RULES, "Trapezoid Area Formula",
         "The area of a trapezoid is half the sum of its bases times its height.")
def trapezoid_area(ctx, m):
    for poly, key in ctx.polygons("Trapezoid"):
        area = _area(ctx, poly)
        if area not in ctx.mentioned:
            continue
        names = _cycle(poly)
        for shift in (0, 1):
            p0, p1, p2, p3 = names[shift:] + names[:shift]
            parallel = ctx.parallel_key((p0, p1), (p2, p3))
            if parallel is None:
                continue
            for apex, foot, keys in _heights(ctx, (p0, p1), (p2, p3)):
                yield (key, parallel) + keys, [
                    Equation(area, (ctx.L(p0, p1) + ctx.L(p2, p3)) * ctx.L(apex, foot) / 2)]


@theorem(RULES, "Polygon Perimeter Formula",
         "The perimeter of a polygon is the sum of its sides.")
def perimeter(ctx, m):
    for poly, key in ctx.polygons():
        total = ctx.Q(Literal("PerimeterOf", (poly,)))
        if total in ctx.mentioned:
            yield (key,), [Equation(total, sum(ctx.sides(_cycle(poly))))]
