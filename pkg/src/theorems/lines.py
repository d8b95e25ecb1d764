"""
Rules about lines, rays and the angles they form.
Path: src/theorems/lines.py
"""
from itertools import combinations
from typing import List

from src.algebra import Equation
from src.formal_lang import Literal
from src.validation.staging import same_angle, same_angle_equations, split_equations, vertical_angle_equations

from .rule import TheoremRule, theorem

RULES: List[TheoremRule] = []


@theorem(RULES, "Line Segment Split",
         "If M lies on segment AB, then AB = AM + MB.")
def segment_split(ctx, m):
    yield from ctx.staged(split_equations(ctx.sketch, ctx.table))


@theorem(RULES, "Same Angle",
         "Angles whose arms lie on the same rays from one vertex are equal.")
def same_angle_rule(ctx, m):
    for key, lit in ctx.literal_nodes("Angle"):
        if len(lit.args) != 3:
            continue
        for s in same_angle_equations(ctx.sketch, lit.point_names(), ctx.table):
            keys = ctx.keys_of(s.premises)
            if keys is not None:
                yield (key,) + keys, [s.equation]
    for first, second in combinations(ctx.mentioned_angles(), 2):
        witnesses = same_angle(ctx.sketch, first, second)
        if not witnesses:
            continue
        keys = ctx.keys_of(witnesses)
        if keys:
            yield keys, [Equation(ctx.A(*first), ctx.A(*second))]


@theorem(RULES, "Adjacent Supplementary Angles",
         "If C lies on the extension of AV beyond V, then angle AVB + angle BVC = 180.")
def adjacent_supplementary(ctx, m):
    sketch = ctx.sketch
    for a, v, b in ctx.mentioned_angles():
        for arm, other in ((a, b), (b, a)):
            chain = sketch.chain(v, arm)
            if chain is None or other in chain:
                continue
            for c in chain.points:
                if c in (v, arm) or not sketch.between(v, arm, c):
                    continue
                keys = ctx.support(v, arm, c)
                if keys:
                    yield keys, [Equation(ctx.A(arm, v, other) + ctx.A(other, v, c), 180)]


@theorem(RULES, "Vertical Angle Theorem",
         "Vertically opposite angles at the crossing of two lines are equal.")
def vertical_angles(ctx, m):
    yield from ctx.staged(vertical_angle_equations(ctx.sketch, ctx.table, ctx.mentioned))


def _parallel_pairs(ctx):
    """(key, (A, B), (C, D)) for each parallel literal in both orientations of the second line."""
    for key, lit in ctx.literal_nodes("Parallel"):
        segments = [a.point_names() for a in lit.args if isinstance(a, Literal) and a.predicate == "Line"]
        if len(segments) != 2:
            continue
        (a, b), (c, d) = segments
        for s1 in ((a, b), (b, a)):
            for s2 in ((c, d), (d, c)):
                yield key, s1, s2


@theorem(RULES, "Corresponding Angle Theorem",
         "A transversal through parallel lines makes equal corresponding angles.")
def corresponding_angles(ctx, m):
    sketch = ctx.sketch
    for key, (a, b), (c, d) in _parallel_pairs(ctx):
        # transversals VAC and VBD meet at the apex V
        apex = sketch.intersection((a, c), (b, d))
        if apex is None or apex in (a, b, c, d):
            continue
        if not (sketch.same_ray(apex, a, c) and sketch.same_ray(apex, b, d)):
            continue
        first, second = ctx.support(apex, a, c), ctx.support(apex, b, d)
        if first is None or second is None:
            continue
        yield (key,) + first + second, [
            Equation(ctx.A(apex, a, b), ctx.A(apex, c, d)),
            Equation(ctx.A(apex, b, a), ctx.A(apex, d, c)),
        ]


def _quadrilateral_sides(ctx):
    """(polygon key, parallel key, cycle P0..P3) where P0P1 is parallel to P2P3."""
    for poly, pkey in ctx.polygons():
        names = poly.point_names()
        if len(names) != 4:
            continue
        for shift in (0, 1):
            cycle = names[shift:] + names[:shift]
            pk = ctx.parallel_key(cycle[0:2], cycle[2:4])
            if pk is not None:
                yield pkey, pk, cycle


@theorem(RULES, "Alternate Interior Angle Theorem",
         "A transversal through parallel lines makes equal alternate interior angles.")
def alternate_interior(ctx, m):
    sketch = ctx.sketch
    for key, (a, b), (c, d) in _parallel_pairs(ctx):
        # Z shape: AD and BC cross between the parallels
        e = sketch.intersection((a, d), (b, c))
        if e is None or not (sketch.between(e, a, d) and sketch.between(e, b, c)):
            continue
        first, second = ctx.support(e, a, d), ctx.support(e, b, c)
        if first is None or second is None:
            continue
        yield (key,) + first + second, [
            Equation(ctx.A(b, a, d), ctx.A(c, d, a)),
            Equation(ctx.A(a, b, c), ctx.A(d, c, b)),
        ]
    for pkey, key, (p0, p1, p2, p3) in _quadrilateral_sides(ctx):
        yield (pkey, key), [
            Equation(ctx.A(p1, p0, p2), ctx.A(p3, p2, p0)),
            Equation(ctx.A(p0, p1, p3), ctx.A(p2, p3, p1)),
        ]


@theorem(RULES, "Consecutive Interior Angle Theorem",
         "Interior angles on the same side of a transversal through parallel lines sum to 180.")
def consecutive_interior(ctx, m):
    for pkey, key, (p0, p1, p2, p3) in _quadrilateral_sides(ctx):
        yield (pkey, key), [
            Equation(ctx.A(p3, p0, p1) + ctx.A(p0, p3, p2), 180),
            Equation(ctx.A(p0, p1, p2) + ctx.A(p1, p2, p3), 180),
        ]


@theorem(RULES, "Perpendicular to Right Angle",
         "Perpendicular lines meet at right angles.")
def perpendicular_right_angle(ctx, m):
    sketch = ctx.sketch
    mentioned = set(ctx.mentioned)
    for key, lit in ctx.literal_nodes("Perpendicular"):
        segments = [a.point_names() for a in lit.args if isinstance(a, Literal) and a.predicate == "Line"]
        if len(segments) != 2:
            continue
        e = sketch.intersection(*segments)
        if e is None:
            continue
        first, second = (sketch.line_points(s) for s in segments)
        for p in first:
            for q in second:
                if e in (p, q):
                    continue
                right = ctx.A(p, e, q)
                if not (p in segments[0] and q in segments[1]) and right not in mentioned:
                    continue
                witnesses = ctx.support(e, p, *segments[0]), ctx.support(e, q, *segments[1])
                if None in witnesses:
                    continue
                yield (key,) + witnesses[0] + witnesses[1], [Equation(right, 90)]


@theorem(RULES, "Angle Bisector Definition",
         "A bisector splits an angle into two equal halves.",
         "BisectsAngle(Line(V,B),Angle(X,V,Y))")
def angle_bisector(ctx, m):
    v, b, x, y = m.points("VBXY")
    half = ctx.A(x, v, b)
    yield (), [Equation(half, ctx.A(b, v, y)), Equation(ctx.A(x, v, y), 2 * half)]


@theorem(RULES, "Midpoint Definition",
         "The midpoint of AB is equally far from A and B.",
         "IsMidpointOf(M,Line(A,B))")
def midpoint(ctx, m):
    mid, a, b = m.points("MAB")
    yield (), [Equation(ctx.L(a, mid), ctx.L(mid, b))]


@theorem(RULES, "Perpendicular Bisector Definition",
         "The perpendicular bisector of AB meets it at right angles in its midpoint; its points are equidistant from A and B.",
         "IsPerpendicularBisectorOf(Line(P,Q),Line(A,B))")
def perpendicular_bisector(ctx, m):
    p, q, a, b = m.points("PQAB")
    mid = ctx.sketch.intersection((p, q), (a, b))
    if mid is None:
        yield (), [Equation(ctx.L(p, a), ctx.L(p, b)), Equation(ctx.L(q, a), ctx.L(q, b))]
        return
    conclusions = [Equation(ctx.L(a, mid), ctx.L(mid, b))]
    for x in (p, q):
        if x != mid:
            conclusions.append(Equation(ctx.A(a, mid, x), 90))
            conclusions.append(Equation(ctx.L(x, a), ctx.L(x, b)))
    support = ctx.support(mid, a, b)
    if support is not None:
        yield support, conclusions
