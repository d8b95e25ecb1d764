"""
Predicate catalog of the geometry formal language.
Path: src/formal_lang/catalog.py
"""
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

# symmetry kinds used by canonicalization
NONE = "none"
SEGMENT = "segment"          # two endpoints, unordered
VERTEX = "vertex"            # Angle(A,B,C) == Angle(C,B,A)
UNORDERED = "unordered"      # all arguments commute
CYCLE = "cycle"              # polygon vertex cycle, rotation + reflection
CORRESPONDENCE = "correspondence"  # Similar/Congruent: joint vertex relabeling

FIGURE = "figure"
RELATION = "relation"
QUANTITY = "quantity"
OPERATOR = "operator"
GOAL = "goal"


@dataclass(frozen=True)
class PredicateSpec:
    """One catalog row"""
    name: str
    arities: Tuple[int, ...] = ()
    min_arity: Optional[int] = None
    kind: str = RELATION
    symmetry: str = NONE
    internal: bool = False
    example: str = ""
    explanation: str = ""

    def accepts(self, n: int) -> bool:
        if self.min_arity is not None:
            return n >= self.min_arity
        return n in self.arities

    def arity_text(self) -> str:
        if self.min_arity is not None:
            return f"{self.min_arity}+"
        return " or ".join(str(a) for a in self.arities)

    def symmetry_for(self, n: int) -> str:
        # Arc(A,B) is the minor arc and therefore unordered; Arc(A,B,C) is directed
        if self.name == "Arc":
            return SEGMENT if n == 2 else NONE
        if self.name == "Angle":
            return VERTEX if n == 3 else NONE
        return self.symmetry


def _spec(name, arities=(), *, min_arity=None, kind=RELATION, symmetry=NONE,
          internal=False, example="", explanation="") -> PredicateSpec:
    return PredicateSpec(name, tuple(arities), min_arity, kind, symmetry, internal, example, explanation)


POLYGON_SIZES = {
    "Triangle": 3, "Quadrilateral": 4, "Parallelogram": 4, "Square": 4, "Rectangle": 4,
    "Rhombus": 4, "Trapezoid": 4, "Kite": 4, "Pentagon": 5, "Hexagon": 6,
    "Heptagon": 7, "Octagon": 8,
}

_ROWS = [
    # figures
    _spec("Line", (2,), kind=FIGURE, symmetry=SEGMENT, example="Line(A,B)",
          explanation="A line segment with endpoints A and B"),
    _spec("Angle", (1, 3), kind=FIGURE, example="Angle(A,B,C)",
          explanation="Angle ABC with B as the vertex (Angle(A): angle with vertex A)"),
    _spec("Triangle", (3,), kind=FIGURE, symmetry=UNORDERED, example="Triangle(A,B,C)",
          explanation="Triangle with vertices A, B, and C"),
    _spec("Quadrilateral", (4,), kind=FIGURE, symmetry=CYCLE, example="Quadrilateral(A,B,C,D)",
          explanation="Quadrilateral with vertices A, B, C, and D"),
    _spec("Parallelogram", (4,), kind=FIGURE, symmetry=CYCLE, example="Parallelogram(A,B,C,D)",
          explanation="Parallelogram with vertices A, B, C, and D"),
    _spec("Square", (4,), kind=FIGURE, symmetry=CYCLE, example="Square(A,B,C,D)",
          explanation="Square with vertices A, B, C, and D"),
    _spec("Rectangle", (4,), kind=FIGURE, symmetry=CYCLE, example="Rectangle(A,B,C,D)",
          explanation="Rectangle with vertices A, B, C, and D"),
    _spec("Rhombus", (4,), kind=FIGURE, symmetry=CYCLE, example="Rhombus(A,B,C,D)",
          explanation="Rhombus with vertices A, B, C, and D"),
    _spec("Trapezoid", (4,), kind=FIGURE, symmetry=CYCLE, example="Trapezoid(A,B,C,D)",
          explanation="Trapezoid with vertices A, B, C, and D"),
    _spec("Kite", (4,), kind=FIGURE, symmetry=CYCLE, example="Kite(A,B,C,D)",
          explanation="Kite with vertices A, B, C, and D"),
    _spec("Polygon", min_arity=3, kind=FIGURE, symmetry=CYCLE, example="Polygon(A,B,C,D)",
          explanation="Polygon with vertices A, B, C, etc."),
    _spec("Pentagon", (5,), kind=FIGURE, symmetry=CYCLE, example="Pentagon(A,B,C,D,E)",
          explanation="Pentagon with vertices A, B, C, D, and E"),
    _spec("Hexagon", (6,), kind=FIGURE, symmetry=CYCLE, example="Hexagon(A,B,C,D,E,F)",
          explanation="Hexagon with vertices A, B, C, D, E, and F"),
    _spec("Heptagon", (7,), kind=FIGURE, symmetry=CYCLE, example="Heptagon(A,B,C,D,E,F,G)",
          explanation="Heptagon with vertices A to G"),
    _spec("Octagon", (8,), kind=FIGURE, symmetry=CYCLE, example="Octagon(A,B,C,D,E,F,G,H)",
          explanation="Octagon with vertices A to H"),
    _spec("Circle", (1, 2), kind=FIGURE, example="Circle(O,r)",
          explanation="Circle with center O (and radius r)"),
    _spec("Arc", (2, 3), kind=FIGURE, example="Arc(A,B)",
          explanation="Minor arc AB, or the arc from A through B to C"),
    _spec("Sector", (3,), kind=FIGURE, example="Sector(O,A,B)",
          explanation="Sector of circle O bounded by radii OA and OB"),
    _spec("Shape", min_arity=1, kind=FIGURE, example="Shape($)",
          explanation="Unresolved or composite shape"),

    # properties and relations
    _spec("Equilateral", (1,), example="Equilateral(Triangle(A,B,C))",
          explanation="The polygon is equilateral"),
    _spec("Regular", (1,), example="Regular(Polygon(A,B,C,D))",
          explanation="The polygon is regular"),
    _spec("PointLiesOnLine", (2,), example="PointLiesOnLine(A,Line(B,C))",
          explanation="Point A lies on segment BC"),
    _spec("PointLiesOnCircle", (2,), example="PointLiesOnCircle(A,Circle(O,r))",
          explanation="Point A lies on the circle"),
    _spec("Parallel", (2,), symmetry=UNORDERED, example="Parallel(Line(A,B),Line(C,D))",
          explanation="Line AB is parallel to line CD"),
    _spec("Perpendicular", (2,), symmetry=UNORDERED, example="Perpendicular(Line(A,B),Line(C,D))",
          explanation="Line AB is perpendicular to line CD"),
    _spec("BisectsAngle", (2,), example="BisectsAngle(Line(A,B),Angle(X,A,Y))",
          explanation="Line AB bisects angle XAY"),
    _spec("Congruent", (2,), symmetry=CORRESPONDENCE, example="Congruent(Triangle(A,B,C),Triangle(D,E,F))",
          explanation="Triangle ABC is congruent to triangle DEF"),
    _spec("Similar", (2,), symmetry=CORRESPONDENCE, example="Similar(Triangle(A,B,C),Triangle(D,E,F))",
          explanation="Triangle ABC is similar to triangle DEF"),
    _spec("Tangent", (2,), example="Tangent(Line(A,B),Circle(O,r))",
          explanation="Line AB is tangent to the circle"),
    _spec("Secant", (2,), example="Secant(Line(A,B),Circle(O,r))",
          explanation="Line AB is a secant of the circle"),
    _spec("CircumscribedTo", (2,), example="CircumscribedTo(Circle(O),Triangle(A,B,C))",
          explanation="First shape is circumscribed to the second shape"),
    _spec("InscribedIn", (2,), example="InscribedIn(Triangle(A,B,C),Circle(O))",
          explanation="First shape is inscribed in the second shape"),
    _spec("IsMidpointOf", (2,), example="IsMidpointOf(C,Line(A,B))",
          explanation="Point C is the midpoint of segment AB"),
    _spec("IsCentroidOf", (2,), example="IsCentroidOf(O,Triangle(A,B,C))",
          explanation="Point O is the centroid of triangle ABC"),
    _spec("IsIncenterOf", (2,), example="IsIncenterOf(O,Triangle(A,B,C))",
          explanation="Point O is the incenter of triangle ABC"),
    _spec("IsRadiusOf", (2,), example="IsRadiusOf(Line(O,A),Circle(O,r))",
          explanation="Segment OA is a radius of the circle"),
    _spec("IsDiameterOf", (2,), example="IsDiameterOf(Line(A,B),Circle(O,r))",
          explanation="Segment AB is a diameter of the circle"),
    _spec("IsMidsegmentOf", (2,), example="IsMidsegmentOf(Line(A,B),Triangle(D,E,F))",
          explanation="Segment AB is a midsegment of triangle DEF"),
    _spec("IsChordOf", (2,), example="IsChordOf(Line(A,B),Circle(O,r))",
          explanation="Segment AB is a chord of the circle"),
    _spec("IsPerpendicularBisectorOf", (2,), example="IsPerpendicularBisectorOf(Line(A,B),Line(C,D))",
          explanation="Line AB is the perpendicular bisector of segment CD"),
    _spec("IsMedianOf", (2,), example="IsMedianOf(Line(E,F),Trapezoid(A,B,C,D))",
          explanation="Segment EF is the median of the trapezoid, or a median of the triangle"),

    # quantities
    _spec("AreaOf", (1,), kind=QUANTITY, example="AreaOf(Triangle(A,B,C))", explanation="Area of the shape"),
    _spec("PerimeterOf", (1,), kind=QUANTITY, example="PerimeterOf(Triangle(A,B,C))",
          explanation="Perimeter of the shape"),
    _spec("RadiusOf", (1,), kind=QUANTITY, example="RadiusOf(Circle(O))", explanation="Radius of circle O"),
    _spec("DiameterOf", (1,), kind=QUANTITY, example="DiameterOf(Circle(O))",
          explanation="Diameter of circle O"),
    _spec("CircumferenceOf", (1,), kind=QUANTITY, example="CircumferenceOf(Circle(O))",
          explanation="Circumference of circle O"),
    _spec("MeasureOf", (1,), kind=QUANTITY, example="MeasureOf(Angle(A,B,C))",
          explanation="Measure of an angle or arc, in degrees"),
    _spec("LengthOf", (1,), kind=QUANTITY, example="LengthOf(Line(A,B))",
          explanation="Length of segment AB"),

    # arithmetic
    _spec("SinOf", (1,), kind=OPERATOR, example="SinOf(MeasureOf(Angle(A,B,C)))", explanation="Sine, degrees"),
    _spec("CosOf", (1,), kind=OPERATOR, example="CosOf(MeasureOf(Angle(A,B,C)))", explanation="Cosine, degrees"),
    _spec("TanOf", (1,), kind=OPERATOR, example="TanOf(MeasureOf(Angle(A,B,C)))", explanation="Tangent, degrees"),
    _spec("CotOf", (1,), kind=OPERATOR, example="CotOf(MeasureOf(Angle(A,B,C)))",
          explanation="Cotangent, degrees"),
    _spec("HalfOf", (1,), kind=OPERATOR, example="HalfOf(MeasureOf(Arc(A,B)))", explanation="Half of the value"),
    _spec("SqrtOf", (1,), kind=OPERATOR, example="SqrtOf(3)", explanation="Square root of the value"),
    _spec("RatioOf", (2,), kind=OPERATOR, example="RatioOf(LengthOf(Line(A,B)),LengthOf(Line(C,D)))",
          explanation="Ratio of the first value to the second"),
    _spec("Add", min_arity=2, kind=OPERATOR, symmetry=UNORDERED, example="Add(x,y,z)",
          explanation="Sum of the values"),
    _spec("Mul", min_arity=2, kind=OPERATOR, symmetry=UNORDERED, example="Mul(x,y)",
          explanation="Product of the values"),
    _spec("Sub", (2,), kind=OPERATOR, example="Sub(x,y)", explanation="First value minus the second"),
    _spec("Div", (2,), kind=OPERATOR, example="Div(x,y)", explanation="First value divided by the second"),
    _spec("Pow", (2,), kind=OPERATOR, example="Pow(x,2)", explanation="First value raised to the second"),
    _spec("Equals", (2,), symmetry=UNORDERED, example="Equals(LengthOf(Line(A,B)),10)",
          explanation="The two values are equal"),
    _spec("Find", (1,), kind=GOAL, example="Find(LengthOf(Line(A,B)))", explanation="The value to find"),

    # engine-internal
    _spec("Collinear", min_arity=3, symmetry=UNORDERED, internal=True, example="Collinear(A,B,C)",
          explanation="The points lie on one line"),
    _spec("SimRatio", (2,), kind=QUANTITY, internal=True,
          example="SimRatio(Triangle(A,B,C),Triangle(D,E,F))",
          explanation="Ratio of corresponding sides of two similar figures"),
]

CATALOG: Dict[str, PredicateSpec] = {row.name: row for row in _ROWS}

QUANTITY_PREDICATES = frozenset(n for n, s in CATALOG.items() if s.kind == QUANTITY)
OPERATOR_PREDICATES = frozenset(n for n, s in CATALOG.items() if s.kind == OPERATOR)
POLYGON_PREDICATES = frozenset(POLYGON_SIZES) | {"Polygon"}


def lookup(name: str) -> Optional[PredicateSpec]:
    return CATALOG.get(name)


def public_rows():
    """Catalog rows a user formalization may use, in table order."""
    return [row for row in _ROWS if not row.internal]
