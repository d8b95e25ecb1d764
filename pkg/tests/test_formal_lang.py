import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.formal_lang import (
    ArityMismatch, Formalization, InvalidFact, LiteralSyntaxError, MissingGoal, MultipleGoals,
    UnknownPredicate, parse_logic_form, parse_problem, print_literal, render_literal,
)
from src.formal_lang.catalog import public_rows
from src.formal_lang.parser import roundtrip

EXAMPLES = [row.example for row in public_rows() if row.example]


@pytest.mark.parametrize("text", EXAMPLES)
def test_catalog_examples_round_trip(text):
    once = roundtrip(text)
    assert roundtrip(once) == once


def test_catalog_covers_the_predicate_families():
    assert len(EXAMPLES) >= 60


def test_line_endpoints_are_sorted():
    assert roundtrip("Line(B,A)") == "Line(A,B)"


def test_angle_is_read_in_either_direction():
    assert roundtrip("Angle(C,B,A)") == "Angle(A,B,C)"


def test_unordered_relations_compare_equal():
    assert parse_logic_form("Parallel(Line(D,C),Line(B,A))") == parse_logic_form("Parallel(Line(A,B),Line(C,D))")


def test_similarity_keeps_vertex_correspondence():
    base = parse_logic_form("Similar(Triangle(A,B,C),Triangle(D,E,F))")
    assert parse_logic_form("Similar(Triangle(B,C,A),Triangle(E,F,D))") == base
    assert parse_logic_form("Similar(Triangle(A,B,C),Triangle(E,D,F))") != base


def test_polygon_rotation_is_the_same_figure():
    assert parse_logic_form("Square(C,D,A,B)") == parse_logic_form("Square(A,B,C,D)")


def test_expressions_are_kept_whitespace_free():
    spaced = roundtrip("Equals(LengthOf(Line(A,B)), 3 x + 5)")
    assert spaced == roundtrip("Equals(3x+5,LengthOf(Line(A,B)))")
    assert "3x+5" in spaced


def _random_literal(rng) -> str:
    labels = "ABCDEFGHMNOPQ"
    p = [labels[i] for i in rng.choice(len(labels), size=4, replace=False)]
    templates = [
        "Line({0},{1})",
        "Angle({0},{1},{2})",
        "Triangle({0},{1},{2})",
        "Parallel(Line({0},{1}),Line({2},{3}))",
        "Perpendicular(Line({0},{1}),Line({2},{3}))",
        "PointLiesOnLine({0},Line({1},{2}))",
        "Equals(LengthOf(Line({0},{1})),{n})",
        "Equals(MeasureOf(Angle({0},{1},{2})),{n})",
        "Similar(Triangle({0},{1},{2}),Triangle({3},{1},{0}))",
        "Quadrilateral({0},{1},{2},{3})",
    ]
    template = templates[int(rng.integers(len(templates)))]
    return template.format(*p, n=int(rng.integers(1, 200)))


def test_fuzzed_literals_round_trip():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        text = _random_literal(rng)
        lit = parse_logic_form(text)
        assert parse_logic_form(print_literal(lit)) == lit


def test_unknown_predicate():
    with pytest.raises(UnknownPredicate):
        parse_logic_form("Frobnicate(A,B)")


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        parse_logic_form("Line(A)")


def test_syntax_error_reports_position():
    with pytest.raises(LiteralSyntaxError) as info:
        parse_logic_form("Line(A,B")
    assert info.value.position == len("Line(A,B")


def test_empty_input_is_a_syntax_error():
    with pytest.raises(LiteralSyntaxError):
        parse_logic_form("   ")


PROBLEM = """
# comments and blank lines are ignored

Triangle(A,B,C)
Equals(LengthOf(Line(A,B)),5)
Find(LengthOf(Line(B,C)))
"""


def test_parse_problem_splits_facts_and_goal():
    f = parse_problem(PROBLEM)
    assert f.facts == (parse_logic_form("Triangle(A,B,C)"), parse_logic_form("Equals(LengthOf(Line(A,B)),5)"))
    assert f.goal == parse_logic_form("LengthOf(Line(B,C))")


def test_problem_text_round_trips():
    f = parse_problem(PROBLEM)
    assert parse_problem(f.to_text()) == f
    assert f.to_text().splitlines()[-1] == "Find(LengthOf(Line(B,C)))"


def test_problem_without_goal():
    with pytest.raises(MissingGoal):
        parse_problem("Triangle(A,B,C)\n")


def test_problem_with_two_goals_names_the_second_line():
    with pytest.raises(MultipleGoals) as info:
        parse_problem("Find(x)\nFind(y)\n")
    assert info.value.line == 2


def test_parse_error_carries_line_number():
    with pytest.raises(LiteralSyntaxError) as info:
        parse_problem("Triangle(A,B,C)\nLine(A\nFind(x)\n")
    assert info.value.line == 2
    assert str(info.value).startswith("line 2:")


def test_bare_expression_is_not_a_fact():
    with pytest.raises(InvalidFact):
        parse_problem("3x+5\nFind(x)\n")


def test_from_literals_deduplicates_facts():
    lits = [parse_logic_form(t) for t in ("Line(A,B)", "Line(B,A)", "Find(x)")]
    f = Formalization.from_literals(lits)
    assert len(f.facts) == 1
    with pytest.raises(MissingGoal):
        Formalization.from_literals(lits[:2])


@pytest.mark.parametrize("text, unicode, ascii", [
    ("LengthOf(Line(Q,P))", "PQ", "PQ"),
    ("Angle(N,M,P)", "∠NMP", "angle NMP"),
    ("Parallel(Line(N,Q),Line(O,P))", "NQ ∥ OP", "NQ || OP"),
    ("Triangle(A,B,C)", "△ABC", "triangle ABC"),
    ("Equals(MeasureOf(Angle(A,B,C)),90)", "90 = ∠ABC", "90 = angle ABC"),
])
def test_notation(text, unicode, ascii):
    lit = parse_logic_form(text)
    assert render_literal(lit) == unicode
    assert render_literal(lit, ascii=True) == ascii
