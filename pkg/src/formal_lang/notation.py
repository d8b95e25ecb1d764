"""
Mathematical notation for literals in rendered solutions.
Path: src/formal_lang/notation.py

Line(N,Q) prints as NQ, Angle(N,M,P) as ∠NMP, Parallel as ∥ and so on;
with ascii=True the symbols fall back to plain words.
"""
from typing import Callable, Dict

from .literal import Arg, Expr, Literal, Point

_UNICODE = {
    "angle": "∠", "triangle": "△", "circle": "⊙", "arc": "⌒",
    "parallel": " ∥ ", "perpendicular": " ⊥ ", "similar": " ∼ ", "congruent": " ≅ ",
}
_ASCII = {
    "angle": "angle ", "triangle": "triangle ", "circle": "circle ", "arc": "arc ",
    "parallel": " || ", "perpendicular": " _|_ ", "similar": " ~ ", "congruent": " == ",
}

_QUANTITY_WORDS = {
    "AreaOf": "Area", "PerimeterOf": "Perimeter", "RadiusOf": "Radius",
    "DiameterOf": "Diameter", "CircumferenceOf": "Circumference",
}


def _names(lit: Literal) -> str:
    return "".join(a.name for a in lit.args if isinstance(a, Point))


def render_literal(arg: Arg, ascii: bool = False) -> str:
    """Render a literal (or argument) in textbook notation."""
    sym = _ASCII if ascii else _UNICODE
    if isinstance(arg, (Point, Expr)):
        return str(arg)
    handler = _HANDLERS.get(arg.predicate)
    if handler is not None:
        return handler(arg, sym, ascii)
    inner = ", ".join(render_literal(a, ascii) for a in arg.args)
    return f"{arg.predicate}({inner})" if arg.args else arg.predicate


def _line(lit, sym, ascii):
    return _names(lit)


def _angle(lit, sym, ascii):
    return sym["angle"] + _names(lit)


def _polygon(lit, sym, ascii):
    if lit.predicate == "Triangle":
        return sym["triangle"] + _names(lit)
    return f"{lit.predicate} {_names(lit)}"


def _circle(lit, sym, ascii):
    return sym["circle"] + str(lit.args[0])


def _arc(lit, sym, ascii):
    return sym["arc"] + _names(lit)


def _binary(key: str):
    def handler(lit, sym, ascii):
        a, b = lit.args
        return render_literal(a, ascii) + sym[key] + render_literal(b, ascii)
    return handler


def _lies_on(lit, sym, ascii):
    return f"{render_literal(lit.args[0], ascii)} on {render_literal(lit.args[1], ascii)}"



def _measure(lit, sym, ascii):
    inner = lit.args[0]
    if isinstance(inner, Literal) and inner.predicate == "Arc":
        return "m" + render_literal(inner, ascii)
    return render_literal(inner, ascii)


def _length(lit, sym, ascii):
    return render_literal(lit.args[0], ascii)


def _quantity(lit, sym, ascii):
    return f"{_QUANTITY_WORDS[lit.predicate]}({render_literal(lit.args[0], ascii)})"


def _sim_ratio(lit, sym, ascii):
    return "sim_ratio_" + "_".join(_names(a) for a in lit.args if isinstance(a, Literal))


def _collinear(lit, sym, ascii):
    return "Collinear(" + ", ".join(str(a) for a in lit.args) + ")"


def _equals(lit, sym, ascii):
    a, b = lit.args
    return f"{render_literal(a, ascii)} = {render_literal(b, ascii)}"


_HANDLERS: Dict[str, Callable] = {
    "Line": _line,
    "Angle": _angle,
    "Circle": _circle,
    "Arc": _arc,
    "Parallel": _binary("parallel"),
    "Perpendicular": _binary("perpendicular"),
    "Similar": _binary("similar"),
    "Congruent": _binary("congruent"),
    "PointLiesOnLine": _lies_on,
    "PointLiesOnCircle": _lies_on,
    "MeasureOf": _measure,
    "LengthOf": _length,
    "SimRatio": _sim_ratio,
    "Collinear": _collinear,
    "Equals": _equals,
}
_HANDLERS.update({name: _quantity for name in _QUANTITY_WORDS})
for _poly in ("Triangle", "Quadrilateral", "Parallelogram", "Square", "Rectangle", "Rhombus",
              "Trapezoid", "Kite", "Polygon", "Pentagon", "Hexagon", "Heptagon", "Octagon"):
    _HANDLERS[_poly] = _polygon
