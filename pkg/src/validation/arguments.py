"""
Argument kinds of the predicates the sketch reads.
Path: src/validation/arguments.py

The grammar accepts any argument in any slot, so Line(A,5) or
PointLiesOnLine(Line(A,B),Line(C,D)) parse. Such literals are reported
as validation conflicts and kept out of the sketch.
"""
from typing import Dict, List, Optional, Tuple

from src.formal_lang import Literal, Point, print_literal, walk
from src.formal_lang.catalog import POLYGON_PREDICATES

POINT = "point"

# figures whose every argument is a point
POINT_FIGURES = frozenset({"Line", "Angle", "Collinear", "Arc", "Sector"}) | POLYGON_PREDICATES

# per argument position: POINT, or the predicate of the expected figure
SLOTS: Dict[str, Tuple[str, ...]] = {
    "PointLiesOnLine": (POINT, "Line"),
    "IsMidpointOf": (POINT, "Line"),
    "PointLiesOnCircle": (POINT, "Circle"),
    "Parallel": ("Line", "Line"),
    "Perpendicular": ("Line", "Line"),
    "IsChordOf": ("Line", "Circle"),
    "IsDiameterOf": ("Line", "Circle"),
    "IsRadiusOf": ("Line", "Circle"),
}


def _kind(arg) -> str:
    if isinstance(arg, Point):
        return POINT
    if isinstance(arg, Literal):
        return arg.predicate
    return "expression"


def _describe(kind: str) -> str:
    if kind == POINT:
        return "a point"
    if kind == "expression":
        return "an expression"
    return f"an {kind}" if kind[0] in "AEIOU" else f"a {kind}"


def slot_problem(lit: Literal) -> Optional[str]:
    """What is wrong with the arguments of lit itself (nested literals not visited)."""
    if lit.predicate in POINT_FIGURES:
        wrong = next((i for i, a in enumerate(lit.args) if not isinstance(a, Point)), None)
        if wrong is not None:
            found = _describe(_kind(lit.args[wrong]))
            return f"argument {wrong + 1} of {lit.predicate} must be a point, not {found}"
        return None
    if lit.predicate == "Circle":
        if lit.args and not isinstance(lit.args[0], Point):
            return f"the center of Circle must be a point, not {_describe(_kind(lit.args[0]))}"
        return None
    expected = SLOTS.get(lit.predicate)
    if expected is None:
        return None
    for i, (want, arg) in enumerate(zip(expected, lit.args), 1):
        if _kind(arg) != want:
            return f"argument {i} of {lit.predicate} must be {_describe(want)}, not {_describe(_kind(arg))}"
    return None


def argument_problems(lit: Literal) -> List[str]:
    """Problems of lit and every literal nested in it, outermost first."""
    out = []
    for inner in walk(lit):
        problem = slot_problem(inner)
        if problem is not None:
            out.append(problem if inner is lit else f"in {print_literal(inner)}: {problem}")
    return out


def well_typed(lit: Literal) -> bool:
    return not argument_problems(lit)
