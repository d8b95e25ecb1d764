import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.formal_lang import parse_logic_form, print_literal
from src.text_parser.parser import TextParser, parse_text, parse_text_report, split_sentences
from src.text_parser.rules import RuleTableError, compile_rule, default_rules, parse_rule_table


def _literals(*texts):
    return [parse_logic_form(t) for t in texts]


def test_parallel_lines_problem_text():
    assert parse_text("N Q ∥ O P. Find length of Q P.") == _literals(
        "Parallel(Line(N,Q),Line(O,P))",
        "Find(LengthOf(Line(Q,P)))",
    )


def test_equality_chain_unfolds_into_pairs():
    assert parse_text("x1 = x2 = x3") == _literals("Equals(x1,x2)", "Equals(x2,x3)")


def test_chain_of_n_equalities_gives_n_minus_one_sentences():
    assert split_sentences("a1 = a2 = a3 = a4") == ["a1 = a2", "a2 = a3", "a3 = a4"]


def test_shaded_region_uses_placeholder():
    assert parse_text("Find the area of the shaded region.") == _literals("Find(AreaOf(Shape($)))")


def test_angle_with_expression():
    assert parse_text("m∠ABC = 3x + 5") == _literals("Equals(MeasureOf(Angle(A,B,C)),3x+5)")


def test_units_are_stripped():
    assert parse_text("AB = 12 cm. m∠ABC = 40°") == _literals(
        "Equals(LengthOf(Line(A,B)),12)",
        "Equals(MeasureOf(Angle(A,B,C)),40)",
    )


def test_square_roots():
    assert parse_text("AB = 5√3. CD = √2") == _literals(
        "Equals(LengthOf(Line(A,B)),Mul(5,SqrtOf(3)))",
        "Equals(LengthOf(Line(C,D)),SqrtOf(2))",
    )


def test_latex_spellings_are_normalized():
    assert parse_text(r"$\triangle ABC \sim \triangle DEF$") == _literals(
        "Similar(Triangle(A,B,C),Triangle(D,E,F))"
    )


def test_circle_relations():
    assert parse_text("AB is a diameter of ⊙O. Find the radius of ⊙O.") == _literals(
        "IsDiameterOf(Line(A,B),Circle(O))",
        "Find(RadiusOf(Circle(O)))",
    )


def test_unmatched_text_is_reported():
    report = parse_text_report("Blah blah AB = 5")
    assert report.literals == _literals("Equals(LengthOf(Line(A,B)),5)")
    assert report.unmatched == ["Blah blah"]
    assert report.goal is None


def test_report_text_puts_goal_last():
    report = parse_text_report("Find x. x = 2")
    assert report.to_text().splitlines() == [print_literal(parse_logic_form("Equals(x,2)")), "Find(x)"]


def test_result_does_not_depend_on_rule_order():
    text = "In △ABC, AB = AC and m∠ABC = 50. D lies on BC. Find m∠BAC."
    rules = list(default_rules())
    assert TextParser(reversed(rules)).parse(text).literals == TextParser(rules).parse(text).literals


def test_default_table_compiles():
    assert len(default_rules()) > 50


def test_unknown_slot_type_is_rejected():
    with pytest.raises(RuleTableError):
        compile_rule(1, "{a:blob} is nice", "Nice({a})")


def test_emission_slot_must_be_bound():
    with pytest.raises(RuleTableError):
        compile_rule(1, "{a:seg} is long", "Long({b})")


def test_malformed_row_reports_line_number():
    with pytest.raises(RuleTableError) as info:
        parse_rule_table("# header\n10\tonly two cells\n")
    assert info.value.line == 2
