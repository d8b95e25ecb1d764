import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra import Equation, SymbolTable, length, measure
from src.formal_lang import parse_problem
from src.hypergraph.graph import ProofHypergraph
from src.solver.engine import known_facts
from src.theorems.context import RuleContext
from src.theorems.matching import match
from src.theorems.registry import TheoremRegistry, default_registry, deductive_pass, list_theorems
from src.validation.report import build_sketch

C1_PROBLEM = """
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


def _expand(text):
    """Graph of a problem after one deductive pass."""
    f = parse_problem(text)
    sketch, report = build_sketch(f)
    table = SymbolTable()
    g = ProofHypergraph(known_facts(list(f.facts) + report.added_literals(), table))
    deductive_pass(g, sketch, table=table, goal=f.goal)
    return g, table


def _theorems_for(g, eq):
    return {g.edges[e].theorem for e in g.producers.get(eq.key, [])}


def test_default_registry_covers_catalog():
    names = default_registry().names()
    for name in ("Triangle Angle Sum", "Pythagorean Theorem", "Angle-Angle Similarity",
                 "Corresponding Angle Theorem", "Inscribed Angle Theorem", "Line Segment Split"):
        assert name in names


def test_list_theorems_is_sorted_with_statements():
    listing = list_theorems()
    assert [n for n, _ in listing] == sorted(n for n, _ in listing)
    assert all(statement for _, statement in listing)


def test_select_restricts_and_rejects_unknown_names():
    registry = default_registry().select(["Pythagorean Theorem"])
    assert registry.names() == ["Pythagorean Theorem"]
    with pytest.raises(KeyError):
        default_registry().select(["Law of Nothing"])


def test_registering_a_hook_twice_fails():
    rules = list(default_registry())
    registry = TheoremRegistry(rules)
    with pytest.raises(ValueError):
        registry.register(rules[0])


def test_triangle_angle_sum():
    g, table = _expand("Triangle(A,B,C)\nFind(MeasureOf(Angle(A,B,C)))")
    total = measure("A", "B", "C", table) + measure("B", "C", "A", table) + measure("C", "A", "B", table)
    eq = Equation(total, 180)
    assert eq.key in g.nodes
    assert _theorems_for(g, eq) == {"Triangle Angle Sum"}


def test_isosceles_triangle_angles():
    g, table = _expand(
        "Triangle(A,B,C)\n"
        "Equals(LengthOf(Line(A,B)),LengthOf(Line(A,C)))\n"
        "Find(MeasureOf(Angle(A,B,C)))"
    )
    eq = Equation(measure("A", "B", "C", table), measure("A", "C", "B", table))
    assert "Isosceles Triangle Theorem" in _theorems_for(g, eq)


def test_pythagorean_theorem_fires_on_right_angle():
    g, table = _expand(
        "Triangle(A,B,C)\n"
        "Equals(MeasureOf(Angle(A,C,B)),90)\n"
        "Equals(LengthOf(Line(A,C)),3)\n"
        "Find(LengthOf(Line(A,B)))"
    )
    ac, bc, ab = length("A", "C", table), length("B", "C", table), length("A", "B", table)
    eq = Equation(ac ** 2 + bc ** 2, ab ** 2)
    assert "Pythagorean Theorem" in _theorems_for(g, eq)


def test_corresponding_angles_through_parallels():
    g, table = _expand(C1_PROBLEM)
    first = Equation(measure("M", "N", "Q", table), measure("M", "O", "P", table))
    second = Equation(measure("M", "Q", "N", table), measure("M", "P", "O", table))
    assert "Corresponding Angle Theorem" in _theorems_for(g, first)
    assert "Corresponding Angle Theorem" in _theorems_for(g, second)


def test_segment_split_of_point_on_line():
    g, table = _expand(C1_PROBLEM)
    eq = Equation(length("M", "O", table), length("M", "N", table) + length("N", "O", table))
    assert "Line Segment Split" in _theorems_for(g, eq)


def test_deductive_pass_keeps_graph_acyclic():
    g, _ = _expand(C1_PROBLEM)
    assert len(g.edges) > 1
    assert g.check_acyclic()


def test_match_instantiates_a_rule_once_per_figure():
    f = parse_problem("Triangle(A,B,C)\nTriangle(C,D,E)\nFind(MeasureOf(Angle(A,B,C)))")
    sketch, report = build_sketch(f)
    table = SymbolTable()
    g = ProofHypergraph(known_facts(list(f.facts) + report.added_literals(), table))
    rule = next(r for r in default_registry() if r.name == "Triangle Angle Sum")
    found = match(rule, RuleContext(g, sketch, table, goal=f.goal))
    assert [inst.premises for inst in found] == [("Triangle(A,B,C)",), ("Triangle(C,D,E)",)]
    assert all(inst.rule == "Triangle Angle Sum" and len(inst.conclusions) == 1 for inst in found)


def test_known_conclusion_gains_an_alternative_derivation():
    f = parse_problem("Triangle(A,B,C)\nFind(MeasureOf(Angle(A,B,C)))")
    sketch, report = build_sketch(f)
    table = SymbolTable()
    facts = known_facts(list(f.facts) + report.added_literals(), table)
    rule = next(r for r in default_registry() if r.name == "Triangle Angle Sum")
    angle_sum = match(rule, RuleContext(ProofHypergraph(facts), sketch, table, goal=f.goal))[0].conclusions[0]

    g = ProofHypergraph(facts + [angle_sum])
    registry = default_registry().select(["Triangle Angle Sum"])
    assert deductive_pass(g, sketch, registry, table=table, goal=f.goal) == 1
    assert _theorems_for(g, angle_sum) == {"Known Facts", "Triangle Angle Sum"}
    assert deductive_pass(g, sketch, registry, table=table, goal=f.goal) == 0
