import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from pydantic import ValidationError

from src.algebra import Equation, SymbolTable, length
from src.formal_lang import parse_problem
from src.hypergraph.graph import KNOWN_FACTS, START, ProofHypergraph
from src.solver.algebra_pass import AlgebraState, algebraic_pass
from src.solver.config import SolverConfig
from src.solver.engine import (
    NUMERIC_CONTRADICTION, SATURATED, InconsistentResult, Solution, Unsolvable, solve,
)
from src.solver.render import check_solution, render_solution, result_to_dict

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

RIGHT_TRIANGLE = """
Triangle(A,B,C)
Equals(MeasureOf(Angle(A,C,B)),90)
Equals(LengthOf(Line(A,C)),3)
Equals(LengthOf(Line(B,C)),4)
Find(LengthOf(Line(A,B)))
"""

# x = 10 gives DE = -2; only x = 15 gives a length
TWO_ROOTS = """
Equals(x^2,25x-150)
Equals(LengthOf(Line(D,E)),x-12)
Find(LengthOf(Line(D,E)))
"""

# legs 19 and 27 cannot have hypotenuse 41
IMPOSSIBLE_RIGHT_TRIANGLE = """
Triangle(A,B,C)
Equals(MeasureOf(Angle(A,C,B)),90)
Equals(LengthOf(Line(A,C)),19)
Equals(LengthOf(Line(B,C)),27)
Equals(LengthOf(Line(A,B)),41)
Find(MeasureOf(Angle(A,B,C)))
"""


@pytest.fixture(scope="module")
def c1_solution():
    result = solve(parse_problem(C1_PROBLEM))
    assert isinstance(result, Solution)
    return result


def test_parallel_lines_problem_is_solved(c1_solution):
    assert c1_solution.value == 3
    theorems = {s.theorem for s in c1_solution.steps}
    assert {"Corresponding Angle Theorem", "Angle-Angle Similarity", "Similar Definition"} <= theorems


def test_solution_starts_from_known_facts_and_is_closed(c1_solution):
    assert c1_solution.steps[0].theorem == KNOWN_FACTS
    assert check_solution(c1_solution) == []


def test_minimal_solution_is_smaller_than_the_graph(c1_solution):
    stats = c1_solution.stats
    assert stats.edges_in_minimal == len(c1_solution.steps)
    assert stats.edges_in_minimal < stats.edges


def test_rendering_is_deterministic(c1_solution):
    text = render_solution(c1_solution)
    assert text == render_solution(c1_solution)
    lines = text.splitlines()
    assert len(lines) == len(c1_solution.steps) + 1
    assert lines[0].startswith("Step 1: Known Facts: start ⟹ ")
    assert lines[-1] == "Answer: PQ = 3"


def test_ascii_rendering_has_no_math_symbols(c1_solution):
    text = render_solution(c1_solution, ascii=True)
    assert "⟹" not in text
    assert "∠" not in text


def test_result_json_has_stable_fields(c1_solution):
    data = result_to_dict(c1_solution)
    assert data["status"] == "solved"
    assert data["value"] == 3.0
    assert set(data["stats"]) == {"iterations", "nodes", "edges", "edges_in_minimal", "wall_time"}
    assert data["steps"][0]["premises"] == ["start"]
    json.dumps(data)


def test_known_goal_takes_one_step():
    result = solve(parse_problem("Equals(LengthOf(Line(A,B)),2)\nFind(LengthOf(Line(B,A)))"))
    assert isinstance(result, Solution)
    assert len(result.steps) == 1
    assert result.value == 2
    assert len(render_solution(result).splitlines()) == 2


def test_right_triangle_hypotenuse():
    result = solve(parse_problem(RIGHT_TRIANGLE))
    assert isinstance(result, Solution)
    assert result.value == 5
    assert "Pythagorean Theorem" in {s.theorem for s in result.steps}


def test_compound_goal_is_evaluated():
    result = solve(parse_problem(
        "Equals(LengthOf(Line(A,B)),2)\n"
        "Equals(LengthOf(Line(C,D)),5)\n"
        "Find(Add(LengthOf(Line(A,B)),LengthOf(Line(C,D))))"
    ))
    assert isinstance(result, Solution)
    assert result.value == 7


def test_impossible_right_triangle_is_a_numeric_contradiction():
    result = solve(parse_problem(IMPOSSIBLE_RIGHT_TRIANGLE))
    assert isinstance(result, Unsolvable)
    assert result.reason == NUMERIC_CONTRADICTION
    assert result.detail


def test_structural_conflict_returns_validation_report():
    result = solve(parse_problem("Parallel(Line(A,B),Line(A,C))\nFind(LengthOf(Line(A,B)))"))
    assert isinstance(result, InconsistentResult)
    assert result.feedback.startswith("ERROR")
    assert result_to_dict(result)["status"] == "inconsistent"


@pytest.mark.parametrize("switch", ["deductive", "algebraic"])
def test_both_strategies_are_needed(switch):
    cfg = SolverConfig(**{switch: False})
    result = solve(parse_problem(C1_PROBLEM), cfg)
    assert isinstance(result, Unsolvable)


def test_saturation_without_answer():
    result = solve(parse_problem("Equals(LengthOf(Line(A,B)),x)\nFind(LengthOf(Line(C,D)))"))
    assert isinstance(result, Unsolvable)
    assert result.reason == SATURATED


def test_iteration_budget_is_respected(c1_solution):
    assert c1_solution.stats.iterations <= SolverConfig().max_iterations


def test_config_rejects_nonpositive_budgets():
    with pytest.raises(ValidationError):
        SolverConfig(max_iterations=0)
    with pytest.raises(ValidationError):
        SolverConfig(unknown_field=1)


def test_config_reads_yaml_sections():
    cfg = SolverConfig.from_config({"solver": {"max_iterations": 7}, "algebra": {"exact_premise_limit": 5}})
    assert cfg.max_iterations == 7
    assert cfg.premise_limit == 5


def test_config_reads_numeric_tolerances():
    cfg = SolverConfig.from_config({"algebra": {"rel_tol": 1e-4, "root_grid_cells": 256}})
    assert cfg.rel_tol == 1e-4
    assert cfg.root_grid_cells == 256
    assert cfg.abs_tol == 1e-9


def test_algebraic_pass_records_inconsistent_pair():
    table = SymbolTable()
    x = table.user("x")
    g = ProofHypergraph([Equation(x, 1), Equation(x, 2)])
    algebraic_pass(g, table)
    assert g.contradictions


def test_algebraic_pass_without_equations_adds_nothing():
    g = ProofHypergraph([parse_problem("Triangle(A,B,C)\nFind(LengthOf(Line(A,B)))").facts[0]])
    assert algebraic_pass(g, SymbolTable()) == 0


def test_second_root_is_followed_when_the_first_fails():
    result = solve(parse_problem(TWO_ROOTS))
    assert isinstance(result, Solution)
    assert result.value == 3
    assert result.alternatives == {"x": [10]}
    assert check_solution(result) == []


def test_every_root_failing_is_a_numeric_contradiction():
    result = solve(parse_problem(TWO_ROOTS.replace("x-12", "x-20")))
    assert isinstance(result, Unsolvable)
    assert result.reason == NUMERIC_CONTRADICTION


def test_algebraic_pass_adds_every_root_and_follows_one():
    table = SymbolTable()
    x = table.user("x")
    de = length("D", "E", table)
    g = ProofHypergraph([Equation(x ** 2, 25 * x - 150), Equation(de, x - 12)])
    state = AlgebraState()
    algebraic_pass(g, table, state)

    assert Equation(x, 10).key in g.nodes and Equation(x, 15).key in g.nodes
    choice = state.choices[0]
    assert choice.symbol == "x" and choice.values == [10, 15]
    assert Equation(x, 15).key not in state.visible(g)

    assert state.prune(g)
    assert choice.values[choice.active] == 15
    visible = state.visible(g)
    assert Equation(x, 15).key in visible
    assert Equation(x, 10).key not in visible
    assert Equation(de, -2).key not in visible


def test_only_known_facts_hang_off_start():
    result = solve(parse_problem("Equals(LengthOf(Line(A,B)),2)\nFind(Add(3,4))"))
    assert isinstance(result, Solution)
    assert result.value == 7
    from_start = [e for e in result.graph.edges.values() if e.premises == (START,)]
    assert [e.theorem for e in from_start] == [KNOWN_FACTS]


def test_wrong_argument_kind_is_reported_not_raised():
    result = solve(parse_problem("Equals(LengthOf(Line(A,5)),3)\nFind(LengthOf(Line(A,B)))"))
    assert isinstance(result, InconsistentResult)
    assert "must be a point" in result.feedback
