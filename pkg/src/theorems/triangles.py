"""
Triangle rules: angle sums, isosceles and right triangles, similarity, congruence.
Path: src/theorems/triangles.py
"""
from itertools import combinations, permutations
from typing import List, Sequence, Tuple

import sympy

from src.algebra import Equation
from src.algebra.functions import cosd, sind
from src.formal_lang import Literal, Point, apply, line

from .rule import TheoremRule, theorem

RULES: List[TheoremRule] = []

RIGHT_ANGLE = "Equals(MeasureOf(Angle(A,C,B)),90)"


@theorem(RULES, "Triangle Angle Sum",
         "The interior angles of a triangle sum to 180.")
def angle_sum(ctx, m):
    for tri, key in ctx.triangles():
        if ctx.non_collinear(*tri):
            yield (key,), [Equation(sum(ctx.interior_angles(tri)), 180)]


@theorem(RULES, "Isosceles Triangle Theorem",
         "Angles opposite equal sides of a triangle are equal.",
         "Equals(LengthOf(Line(A,B)),LengthOf(Line(A,C)))")
def isosceles(ctx, m):
    a, b, c = m.points("ABC")
    at_b, at_c = ctx.A(a, b, c), ctx.A(a, c, b)
    if ctx.non_collinear(a, b, c) and ctx.mentions(at_b, at_c):
        yield (), [Equation(at_b, at_c)]


@theorem(RULES, "Isosceles Triangle Converse",
         "Sides opposite equal angles of a triangle are equal.",
         "Equals(MeasureOf(Angle(A,B,C)),MeasureOf(Angle(A,C,B)))")
def isosceles_converse(ctx, m):
    a, b, c = m.points("ABC")
    if ctx.non_collinear(a, b, c):
        yield (), [Equation(ctx.L(a, b), ctx.L(a, c))]


@theorem(RULES, "Equilateral Triangle Properties",
         "An equilateral triangle has equal sides and 60 degree angles.")
def equilateral_triangle(ctx, m):
    for key, lit in ctx.literal_nodes("Equilateral"):
        tri = lit.args[0]
        if not (isinstance(tri, Literal) and tri.predicate == "Triangle"):
            continue
        p = tri.point_names()
        sides = ctx.sides(p)
        yield (key,), [Equation(sides[0], sides[1]), Equation(sides[1], sides[2])] + \
            [Equation(angle, 60) for angle in ctx.interior_angles(p)]


@theorem(RULES, "Pythagorean Theorem",
         "In a right triangle the squares of the legs sum to the square of the hypotenuse.",
         RIGHT_ANGLE)
def pythagorean(ctx, m):
    a, b, c = m.points("ABC")
    legs_and_hyp = (ctx.L(a, c), ctx.L(b, c), ctx.L(a, b))
    if sum(1 for s in legs_and_hyp if s in ctx.mentioned) >= 2:
        yield (), [Equation(legs_and_hyp[0] ** 2 + legs_and_hyp[1] ** 2, legs_and_hyp[2] ** 2)]


@theorem(RULES, "Pythagorean Converse",
         "A triangle whose side lengths satisfy a^2 + b^2 = c^2 has a right angle opposite c.")
def pythagorean_converse(ctx, m):
    for tri, key in ctx.triangles():
        for c in tri:
            a, b = (p for p in tri if p != c)
            values = [ctx.value(s) for s in (ctx.L(a, c), ctx.L(b, c), ctx.L(a, b))]
            if None in values:
                continue
            x, y, z = (v[0] for v in values)
            if sympy.simplify(x ** 2 + y ** 2 - z ** 2) == 0:
                yield (key,) + tuple(v[1] for v in values), [Equation(ctx.A(a, c, b), 90)]


@theorem(RULES, "Right Triangle Trigonometry",
         "In a right triangle sin = opposite/hypotenuse and cos = adjacent/hypotenuse.",
         RIGHT_ANGLE)
def right_trig(ctx, m):
    a, b, c = m.points("ABC")
    hyp = ctx.L(a, b)
    out = []
    for vertex, other in ((a, b), (b, a)):
        angle = ctx.A(c, vertex, other)
        if angle not in ctx.mentioned:
            continue
        out.append(Equation(sind(angle) * hyp, ctx.L(other, c)))
        out.append(Equation(cosd(angle) * hyp, ctx.L(vertex, c)))
    if out:
        yield (), out


def _triangle(p: Sequence[str]) -> Literal:
    # uncanonicalized so the vertex order survives inside Similar/Congruent
    return Literal("Triangle", tuple(Point(n) for n in p))


def _distinct_figures(p: Sequence[str], q: Sequence[str]) -> bool:
    return set(p) != set(q)


@theorem(RULES, "Angle-Angle Similarity",
         "Two triangles with two pairs of equal angles are similar.",
         "Equals(MeasureOf(Angle(A,B,C)),MeasureOf(Angle(D,E,F)))",
         "Equals(MeasureOf(Angle(B,C,A)),MeasureOf(Angle(E,F,D)))",
         distinct=("ABC", "DEF"))
def aa_similarity(ctx, m):
    p, q = m.points("ABC"), m.points("DEF")
    if _distinct_figures(p, q) and ctx.non_collinear(*p) and ctx.non_collinear(*q):
        yield (), [apply("Similar", _triangle(p), _triangle(q))]


def _triangle_pairs(ctx):
    """(p, q, premise keys) for declared triangle pairs under every vertex correspondence."""
    for (t1, k1), (t2, k2) in combinations(ctx.triangles(), 2):
        if not _distinct_figures(t1, t2) or not (ctx.non_collinear(*t1) and ctx.non_collinear(*t2)):
            continue
        for q in permutations(t2):
            yield t1, q, (k1, k2)


def _ratio(ctx, s1, s2) -> Tuple[sympy.Expr, Tuple[str, ...]]:
    v1, v2 = ctx.value(s1), ctx.value(s2)
    if v1 is None or v2 is None or v2[0] == 0:
        return None, ()
    return v1[0] / v2[0], (v1[1], v2[1])


@theorem(RULES, "Side-Angle-Side Similarity",
         "Two triangles with an equal angle between proportional sides are similar.")
def sas_similarity(ctx, m):
    for p, q, keys in _triangle_pairs(ctx):
        a, b, c = p
        d, e, f = q
        angle = ctx.equal(ctx.A(a, b, c), ctx.A(d, e, f))
        if angle is None:
            continue
        r1, k1 = _ratio(ctx, ctx.L(a, b), ctx.L(d, e))
        r2, k2 = _ratio(ctx, ctx.L(b, c), ctx.L(e, f))
        if r1 is not None and r2 is not None and sympy.simplify(r1 - r2) == 0:
            yield keys + angle + k1 + k2, [apply("Similar", _triangle(p), _triangle(q))]


@theorem(RULES, "Side-Side-Side Similarity",
         "Two triangles with proportional sides are similar.")
def sss_similarity(ctx, m):
    for p, q, keys in _triangle_pairs(ctx):
        ratios = [_ratio(ctx, s, t) for s, t in zip(ctx.sides(p), ctx.sides(q))]
        if any(r is None for r, _ in ratios):
            continue
        if all(sympy.simplify(r - ratios[0][0]) == 0 for r, _ in ratios):
            premises = keys + tuple(k for _, ks in ratios for k in ks)
            yield premises, [apply("Similar", _triangle(p), _triangle(q))]


def _corresponding(lit: Literal):
    first, second = lit.args
    if not (isinstance(first, Literal) and isinstance(second, Literal)):
        return None
    p, q = first.point_names(), second.point_names()
    if len(p) != len(q) or len(p) < 3:
        return None
    return first, second, p, q


@theorem(RULES, "Similar Definition",
         "Similar figures have equal corresponding angles and proportional corresponding sides.")
def similar_definition(ctx, m):
    for key, lit in ctx.literal_nodes("Similar"):
        parts = _corresponding(lit)
        if parts is None:
            continue
        first, second, p, q = parts
        ratio = ctx.Q(Literal("SimRatio", (first, second)))
        conclusions = [Equation(x, y) for x, y in zip(ctx.interior_angles(p), ctx.interior_angles(q))]
        conclusions += [Equation(ratio, s / t) for s, t in zip(ctx.sides(p), ctx.sides(q))]
        yield (key,), conclusions


def _congruent(p, q):
    return apply("Congruent", _triangle(p), _triangle(q))


@theorem(RULES, "Side-Angle-Side Congruence",
         "Two triangles with two equal sides and the equal included angle are congruent.")
def sas_congruence(ctx, m):
    for p, q, keys in _triangle_pairs(ctx):
        (a, b, c), (d, e, f) = p, q
        parts = [ctx.equal(ctx.L(a, b), ctx.L(d, e)), ctx.equal(ctx.A(a, b, c), ctx.A(d, e, f)),
                 ctx.equal(ctx.L(b, c), ctx.L(e, f))]
        if None not in parts:
            yield keys + sum(parts, ()), [_congruent(p, q)]


@theorem(RULES, "Angle-Side-Angle Congruence",
         "Two triangles with two equal angles and the equal included side are congruent.")
def asa_congruence(ctx, m):
    for p, q, keys in _triangle_pairs(ctx):
        (a, b, c), (d, e, f) = p, q
        parts = [ctx.equal(ctx.A(c, a, b), ctx.A(f, d, e)), ctx.equal(ctx.L(a, b), ctx.L(d, e)),
                 ctx.equal(ctx.A(a, b, c), ctx.A(d, e, f))]
        if None not in parts:
            yield keys + sum(parts, ()), [_congruent(p, q)]


@theorem(RULES, "Side-Side-Side Congruence",
         "Two triangles with three pairs of equal sides are congruent.")
def sss_congruence(ctx, m):
    for p, q, keys in _triangle_pairs(ctx):
        parts = [ctx.equal(s, t) for s, t in zip(ctx.sides(p), ctx.sides(q))]
        if None not in parts:
            yield keys + sum(parts, ()), [_congruent(p, q)]


@theorem(RULES, "Congruent Definition",
         "Congruent figures have equal corresponding sides and angles.")
def congruent_definition(ctx, m):
    for key, lit in ctx.literal_nodes("Congruent"):
        parts = _corresponding(lit)
        if parts is None:
            continue
        _, _, p, q = parts
        conclusions = [Equation(x, y) for x, y in zip(ctx.sides(p), ctx.sides(q))]
        conclusions += [Equation(x, y) for x, y in zip(ctx.interior_angles(p), ctx.interior_angles(q))]
        yield (key,), conclusions


def _midsegment(ctx, d, e, b, c):
    return [Equation(ctx.L(d, e), ctx.L(b, c) / 2),
            apply("Parallel", line(d, e), line(b, c))]


@theorem(RULES, "Triangle Midsegment Theorem",
         "The segment joining the midpoints of two sides is parallel to the third side and half as long.",
         "IsMidpointOf(D,Line(A,B))",
         "IsMidpointOf(E,Line(A,C))")
def midsegment_from_midpoints(ctx, m):
    a, b, c, d, e = m.points("ABCDE")
    if ctx.non_collinear(a, b, c):
        yield (), _midsegment(ctx, d, e, b, c)


@theorem(RULES, "Triangle Midsegment Theorem",
         "The segment joining the midpoints of two sides is parallel to the third side and half as long.")
def midsegment_declared(ctx, m):
    sketch = ctx.sketch
    for key, lit in ctx.literal_nodes("IsMidsegmentOf"):
        segment, tri = lit.args
        if not (isinstance(tri, Literal) and tri.predicate == "Triangle"):
            continue
        d, e = segment.point_names()
        p = tri.point_names()
        for x in p:
            y, z = (v for v in p if v != x)
            for dd, ee in ((d, e), (e, d)):
                if sketch.between(dd, x, y) and sketch.between(ee, x, z):
                    yield (key,), _midsegment(ctx, dd, ee, y, z)


@theorem(RULES, "Median Definition",
         "A median of a triangle joins a vertex to the midpoint of the opposite side.")
def median_definition(ctx, m):
    for key, lit in ctx.literal_nodes("IsMedianOf"):
        segment, fig = lit.args
        if not (isinstance(fig, Literal) and fig.predicate == "Triangle"):
            continue
        p = fig.point_names()
        ends = segment.point_names()
        apex = [v for v in ends if v in p]
        if len(apex) != 1:
            continue
        mid = next(v for v in ends if v != apex[0])
        b, c = (v for v in p if v != apex[0])
        yield (key,), [Equation(ctx.L(b, mid), ctx.L(mid, c))]


@theorem(RULES, "Trapezoid Median Theorem",
         "The median of a trapezoid is half the sum of its bases.")
def trapezoid_median(ctx, m):
    sketch = ctx.sketch
    for key, lit in ctx.literal_nodes("IsMedianOf"):
        segment, fig = lit.args
        if not (isinstance(fig, Literal) and fig.predicate == "Trapezoid"):
            continue
        e, f = segment.point_names()
        names = fig.point_names()
        for shift in (0, 1):
            p0, p1, p2, p3 = names[shift:] + names[:shift]
            for ee, ff in ((e, f), (f, e)):
                if sketch.between(ee, p1, p2) and sketch.between(ff, p3, p0):
                    keys = (ctx.support(ee, p1, p2) or ()) + (ctx.support(ff, p3, p0) or ())
                    yield (key,) + keys, [Equation(ctx.L(e, f), (ctx.L(p0, p1) + ctx.L(p2, p3)) / 2)]


@theorem(RULES, "Centroid Theorem",
         "The centroid divides each median in the ratio 2:1 from the vertex.")
def centroid(ctx, m):
    sketch = ctx.sketch
    for key, lit in ctx.literal_nodes("IsCentroidOf"):
        g, tri = lit.args
        if not (isinstance(tri, Literal) and tri.predicate == "Triangle"):
            continue
        p = tri.point_names()
        for v in p:
            u, w = (x for x in p if x != v)
            chain = sketch.chain(v, g.name)
            if chain is None:
                continue
            for mid in chain.points:
                if mid in (v, g.name) or not sketch.between(mid, u, w):
                    continue
                first, second = ctx.support(v, g.name, mid), ctx.support(mid, u, w)
                if first is None or second is None:
                    continue
                yield (key,) + first + second, [
                    Equation(ctx.L(v, g.name), 2 * ctx.L(g.name, mid)),
                    Equation(ctx.L(u, mid), ctx.L(mid, w)),
                ]


@theorem(RULES, "Incenter Definition",
         "The incenter lies on the bisector of every angle of the triangle.")
def incenter(ctx, m):
    for key, lit in ctx.literal_nodes("IsIncenterOf"):
        i, tri = lit.args
        if not (isinstance(tri, Literal) and tri.predicate == "Triangle"):
            continue
        p = tri.point_names()
        conclusions = []
        for v in p:
            u, w = (x for x in p if x != v)
            conclusions.append(Equation(ctx.A(i.name, v, u), ctx.A(i.name, v, w)))
        yield (key,), conclusions
