import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra import Equation, SymbolTable, length, measure
from src.formal_lang import Point, apply, figure, parse_logic_form, parse_problem, print_literal
from src.validation.completion import complete_relations
from src.validation.consistency import check_consistency
from src.validation.report import INCONSISTENT, build_sketch, format_feedback
from src.validation.sketch import GeometrySketch
from src.validation.staging import (
    radius_equations, same_angle_equations, split_equations, vertical_angle_equations,
)

C1_PROBLEM = """
# N Q parallel O P. Find length of Q P.
Equals(LengthOf(Line(P,Q)),x)
Equals(LengthOf(Line(M,N)),6)
Equals(LengthOf(Line(N,O)),3+3/5)
PointLiesOnLine(Q,Line(M,P))
Angle(N,M,P)
Angle(O,M,P)
Parallel(Line(N,Q),Line(O,P))
Equals(LengthOf(Line(M,Q)),5)
PointLiesOnLine(N,Line(M,O))
Find(LengthOf(Line(Q,P)))
"""


def _validate(*lines):
    text = "\n".join(lines + ("Find(LengthOf(Line(A,B)))",))
    return build_sketch(parse_problem(text))


def test_point_on_line_builds_ordered_chain():
    sketch, _ = _validate("PointLiesOnLine(D,Line(E,C))")
    chain = sketch.chain("D", "E", "C")
    assert chain is not None
    assert chain.ordered
    assert chain.points == ("C", "D", "E")
    assert sketch.between("D", "E", "C")
    assert not sketch.between("E", "D", "C")


def test_every_referenced_point_is_in_sketch():
    sketch, _ = build_sketch(parse_problem(C1_PROBLEM))
    assert sketch.points == {"M", "N", "O", "P", "Q"}


def test_perpendicular_completion_adds_two_subsegment_relations():
    sketch, report = _validate(
        "Perpendicular(Line(P,H),Line(A,B))",
        "PointLiesOnLine(H,Line(A,B))",
    )
    added = sorted(print_literal(c.literal) for c in report.completions)
    assert added == [
        "Perpendicular(Line(A,H),Line(H,P))",
        "Perpendicular(Line(B,H),Line(H,P))",
    ]
    assert report.status == "consistent"
    feedback = format_feedback(report)
    assert feedback.count("ADDED:") == 2
    assert "ERROR" not in feedback


def test_completion_is_a_fixpoint():
    sketch, report = _validate(
        "Perpendicular(Line(P,H),Line(A,B))",
        "PointLiesOnLine(H,Line(A,B))",
        "Parallel(Line(C,D),Line(A,B))",
    )
    assert report.completions
    assert complete_relations(sketch) == []


def test_derived_never_repeats_original_facts():
    sketch, report = _validate(
        "Perpendicular(Line(P,H),Line(A,B))",
        "PointLiesOnLine(H,Line(A,B))",
    )
    assert not set(sketch.derived) & set(sketch.facts)


def test_triangle_with_point_on_side_is_inconsistent():
    _, report = _validate("PointLiesOnLine(B,Line(A,C))", "Triangle(A,B,C)")
    assert report.status == INCONSISTENT
    assert len(report.contradictions) == 1
    assert "ERROR: Triangle(A,B,C) conflicts with PointLiesOnLine(B,Line(A,C))" in format_feedback(report)


def test_triangle_with_collinear_vertices_reports_one_contradiction():
    sketch = GeometrySketch([
        figure("Triangle", "A", "B", "C"),
        apply("Collinear", Point("A"), Point("B"), Point("C")),
    ])
    conflicts = check_consistency(sketch)
    assert len(conflicts) == 1
    assert "collinear" in conflicts[0].message


def test_parallel_lines_sharing_a_point():
    _, report = _validate("Parallel(Line(A,B),Line(A,C))")
    assert report.status == INCONSISTENT
    assert "Parallel(Line(A,B),Line(A,C))" in format_feedback(report)


def test_parallel_and_perpendicular_same_pair():
    _, report = _validate("Parallel(Line(A,B),Line(C,D))", "Perpendicular(Line(A,B),Line(C,D))")
    assert any("both parallel and perpendicular" in c.message for c in report.contradictions)


def test_conflicting_radii():
    _, report = _validate("PointLiesOnCircle(A,Circle(O,5))", "PointLiesOnCircle(B,Circle(O,6))")
    assert any("radii 5 and 6" in c.message for c in report.contradictions)


def test_point_on_segment_it_ends():
    _, report = _validate("PointLiesOnLine(A,Line(A,C))")
    assert format_feedback(report).startswith("ERROR: PointLiesOnLine(A,Line(A,C)):")


def test_betweenness_that_cannot_hold():
    _, report = _validate("PointLiesOnLine(B,Line(A,C))", "PointLiesOnLine(A,Line(B,C))")
    assert any("cannot be ordered" in c.message for c in report.contradictions)


def test_repeated_polygon_vertex():
    sketch = GeometrySketch([figure("Quadrilateral", "A", "B", "A", "C")])
    conflicts = check_consistency(sketch)
    assert [c.message for c in conflicts] == ["repeated vertex A"]


def test_worked_example_is_consistent_and_complete():
    sketch, report = build_sketch(parse_problem(C1_PROBLEM))
    assert check_consistency(sketch) == []
    assert report.completions == ()
    assert format_feedback(report) == "OK"


def test_feedback_is_independent_of_fact_order():
    lines = [
        "Perpendicular(Line(P,H),Line(A,B))",
        "PointLiesOnLine(H,Line(A,B))",
        "Triangle(A,H,P)",
        "PointLiesOnLine(B,Line(A,C))",
        "Triangle(A,B,C)",
    ]
    first = format_feedback(_validate(*lines)[1])
    second = format_feedback(_validate(*reversed(lines))[1])
    assert first == second
    assert first == format_feedback(_validate(*lines)[1])


def test_chord_endpoints_lie_on_circle():
    _, report = _validate("IsChordOf(Line(A,B),Circle(O,r))")
    added = {print_literal(c.literal) for c in report.completions}
    assert added == {"PointLiesOnCircle(A,Circle(O,r))", "PointLiesOnCircle(B,Circle(O,r))"}


def test_diameter_puts_center_on_segment():
    _, report = _validate("IsDiameterOf(Line(A,B),Circle(O))")
    added = {print_literal(c.literal) for c in report.completions}
    assert "PointLiesOnLine(O,Line(A,B))" in added


# staged equations

def test_segment_split_equation():
    table = SymbolTable()
    sketch, _ = _validate("PointLiesOnLine(H,Line(A,B))")
    staged = split_equations(sketch, table)
    assert len(staged) == 1
    assert staged[0].equation == Equation(length("A", "B", table), length("A", "H", table) + length("H", "B", table))
    assert [print_literal(p) for p in staged[0].premises] == ["PointLiesOnLine(H,Line(A,B))"]


def test_same_angle_along_collinear_arm():
    table = SymbolTable()
    sketch, _ = build_sketch(parse_problem(C1_PROBLEM))
    equations = [s.equation for s in same_angle_equations(sketch, ("O", "M", "P"), table)]
    assert Equation(measure("N", "M", "P", table), measure("O", "M", "P", table)) in equations
    assert Equation(measure("O", "M", "Q", table), measure("O", "M", "P", table)) in equations


def test_radius_equations_for_points_on_circle():
    table = SymbolTable()
    sketch, _ = _validate("PointLiesOnCircle(A,Circle(O,r))", "PointLiesOnCircle(B,Circle(O,r))")
    equations = [s.equation for s in radius_equations(sketch, table)]
    assert Equation(length("O", "A", table), table.user("r")) in equations
    assert Equation(length("O", "B", table), table.user("r")) in equations


def test_vertical_angles_at_a_crossing():
    table = SymbolTable()
    sketch, _ = _validate("PointLiesOnLine(E,Line(A,B))", "PointLiesOnLine(E,Line(C,D))")
    equations = [s.equation for s in vertical_angle_equations(sketch, table)]
    assert Equation(measure("A", "E", "C", table), measure("B", "E", "D", table)) in equations
    assert Equation(measure("A", "E", "D", table), measure("B", "E", "C", table)) in equations


@pytest.mark.parametrize("facts", [
    ("PointLiesOnLine(H,Line(A,B))",),
    ("Parallel(Line(A,B),Line(C,D))", "PointLiesOnLine(E,Line(A,B))"),
    ("IsMidpointOf(M,Line(A,B))",),
])
def test_consistent_inputs(facts):
    _, report = _validate(*facts)
    assert report.status == "consistent"


@pytest.mark.parametrize("fact", [
    "Equals(LengthOf(Line(A,5)),3)",
    "PointLiesOnLine(Line(A,B),Line(C,D))",
    "PointLiesOnCircle(A,Line(B,C))",
    "Parallel(A,Line(C,D))",
    "IsMidpointOf(M,Circle(O))",
])
def test_wrong_argument_kinds_are_reported(fact):
    sketch, report = _validate(fact)
    assert report.status == INCONSISTENT
    assert any("must be" in c.message for c in report.contradictions)
    assert format_feedback(report).startswith("ERROR: ")
    assert "5" not in sketch.points


def test_wrong_argument_kind_in_the_goal():
    _, report = build_sketch(parse_problem("Line(A,B)\nFind(LengthOf(Line(A,5)))\n"))
    assert report.status == INCONSISTENT
    assert report.contradictions[0].literals[0].predicate == "Find"


def test_sketch_skips_literals_with_wrong_argument_kinds():
    sketch = GeometrySketch([
        parse_logic_form("PointLiesOnLine(Line(A,B),Line(C,D))"),
        parse_logic_form("Equals(LengthOf(Line(A,5)),3)"),
        parse_logic_form("PointLiesOnCircle(Line(A,B),Circle(O))"),
    ])
    assert sketch.chain("C", "D") is not None
    assert not sketch.collinear("A", "C", "D")
    assert sketch.circles["O"].points == set()
