import sys
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest
import sympy
from scipy.optimize import bisect

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra import (
    ConversionError, DomainEmpty, Equation, Inconsistent, NoRealSolution, NotApplicable, SymbolTable,
    evaluate_constants, format_equation, length, literal_to_equation, measure, minimal_premises,
    numeric_check, parse_expression, solve_linear_system, solve_univariate, substitute, to_sympy,
)
from src.algebra.functions import sind
from src.algebra.printing import format_number
from src.algebra.symbols import Domain
from src.formal_lang import parse_logic_form


@pytest.fixture
def table():
    return SymbolTable()


@pytest.fixture
def xy(table):
    return table.user("x"), table.user("y")


def test_equations_with_equal_residuals_are_equal(xy):
    x, _ = xy
    assert Equation(x + 1, 3) == Equation(3, x + 1)
    assert Equation(x + 1, 3).key == Equation(3, x + 1).key


def test_binding_of_a_pinned_symbol(xy):
    x, _ = xy
    assert Equation(2 * x, 6).binding() == (x, 3)
    assert Equation(x + xy[1], 6).binding() is None


def test_contradiction_and_tautology():
    assert Equation(1, 2).is_contradiction
    assert Equation(2, 2).is_tautology


def test_substitution(xy):
    x, y = xy
    assert substitute(Equation(y, x + 2), Equation(x, 3)) == Equation(y, 5)


def test_substitution_without_shared_symbol(xy, table):
    x, y = xy
    with pytest.raises(NotApplicable):
        substitute(Equation(y, 2), Equation(table.user("z"), 3))


def test_randomized_substitutions_keep_the_value(xy):
    x, y = xy
    rng = np.random.default_rng(3)
    for _ in range(100):
        a, b, c = (int(v) for v in rng.integers(-20, 20, size=3))
        if a == 0:
            continue
        result = substitute(Equation(y, a * x + b), Equation(x, c))
        assert result.binding() == (y, a * c + b)


def test_constant_evaluation_stays_exact_for_rationals(xy):
    x, _ = xy
    folded = evaluate_constants(Equation(x, sympy.Add(3, sympy.Rational(3, 5), evaluate=False)))
    assert folded == Equation(x, sympy.Rational(18, 5))
    assert not folded.approximate


def test_constant_evaluation_approximates_radicals(xy):
    x, _ = xy
    folded = evaluate_constants(Equation(x, sympy.Pow(2, sympy.Rational(1, 2), evaluate=False) * 3))
    assert folded.approximate
    assert abs(float(folded.binding()[1]) - 3 * 2 ** 0.5) < 1e-9


def test_constant_evaluation_needs_a_constant_subterm(xy):
    x, _ = xy
    with pytest.raises(NotApplicable):
        evaluate_constants(Equation(x, 5))


def test_univariate_length_takes_the_positive_root(table):
    ab = length("A", "B", table)
    assert solve_univariate(Equation(ab ** 2, 25), table=table) == [Equation(ab, 5)]


def test_univariate_free_variable_keeps_both_roots(xy, table):
    x, _ = xy
    roots = sorted(float(eq.rhs) for eq in solve_univariate(Equation(x ** 2, 4), table=table))
    assert roots == [-2.0, 2.0]


def test_univariate_domain_and_real_failures(xy, table):
    x, y = xy
    with pytest.raises(DomainEmpty):
        solve_univariate(Equation(length("A", "B", table), -3), table=table)
    with pytest.raises(NoRealSolution):
        solve_univariate(Equation(x ** 2, -1), table=table)
    with pytest.raises(NotApplicable):
        solve_univariate(Equation(x + y, 1), table=table)


def test_univariate_trig_roots_match_grid_oracle(table):
    angle = measure("A", "B", "C", table)
    roots = sorted(float(eq.rhs) for eq in solve_univariate(Equation(sind(angle), sympy.Rational(1, 2)), table=table))
    grid = np.arange(0.5, 180.0, 1.0)
    f = lambda t: np.sin(np.radians(t)) - 0.5  # noqa: E731
    brackets = np.where(np.diff(np.sign(f(grid))) != 0)[0]
    oracle = [bisect(f, grid[i], grid[i + 1], xtol=1e-13) for i in brackets]
    assert len(roots) == len(oracle) == 2
    for root, expected in zip(roots, oracle):
        assert abs(root - expected) < 1e-9


def test_linear_system_solution_and_premises(xy, table):
    x, y = xy
    eqs = [Equation(x + y, 10), Equation(x - y, 2)]
    results = dict((str(eq.lhs), (eq.rhs, premises)) for eq, premises in solve_linear_system(eqs, table=table))
    assert results["x"][0] == 6 and results["y"][0] == 4
    assert set(results["x"][1]) == set(eqs)


def test_minimal_premises_drop_irrelevant_equations(table):
    x, y, z, w = (table.user(n) for n in "xyzw")
    pool = [Equation(x, 1), Equation(y, 2), Equation(z, x + y), Equation(w, 5)]
    premises = minimal_premises(Equation(z, 3), pool, table)
    assert set(premises) == set(pool[:3])


def test_minimal_premises_are_minimum_by_enumeration(table):
    x, y, z = (table.user(n) for n in "xyz")
    pool = [Equation(x, 1), Equation(y, 2), Equation(z, x + y), Equation(z, 3), Equation(x + y, 3)]
    target = Equation(z, 3)
    premises = minimal_premises(target, [e for e in pool if e != target], table)
    others = [e for e in pool if e != target]
    for size in range(1, len(premises)):
        for combo in combinations(others, size):
            with pytest.raises(NotApplicable):
                minimal_premises(target, list(combo), table)


def test_inconsistent_system_names_the_clash(xy, table):
    x, y = xy
    with pytest.raises(Inconsistent) as info:
        solve_linear_system([Equation(x, 1), Equation(x, 2), Equation(y, 3)], table=table)
    assert set(info.value.premises) == {Equation(x, 1), Equation(x, 2)}


def test_nothing_new_from_a_solved_system(xy, table):
    x, _ = xy
    with pytest.raises(NotApplicable):
        solve_linear_system([Equation(x, 1)], table=table)


def test_numeric_check(xy):
    x, _ = xy
    assert numeric_check(Equation((x + 1) ** 2, x ** 2 + 2 * x + 1))
    assert not numeric_check(Equation(x + 1, x))


def test_quantities_become_symbols_with_domains(table):
    ab = to_sympy(parse_logic_form("LengthOf(Line(B,A))"), table)
    assert ab == length("A", "B", table)
    assert table.domain(ab) is Domain.NONNEG_LENGTH
    assert table.domain(measure("A", "B", "C", table)) is Domain.ANGLE
    assert table.domain(table.user("x")) is Domain.FREE


def test_equals_literal_to_equation(xy, table):
    x, _ = xy
    eq = literal_to_equation(parse_logic_form("Equals(LengthOf(Line(A,B)),3x+5)"), table)
    assert eq == Equation(length("A", "B", table), 3 * x + 5)


def test_variable_named_by_a_length_inherits_its_domain(table):
    literal_to_equation(parse_logic_form("Equals(LengthOf(Line(P,Q)),x)"), table)
    assert table.domain(table.user("x")) is Domain.NONNEG_LENGTH


def test_expression_text(xy, table):
    x, _ = xy
    assert sympy.simplify(parse_expression("2x+3", table) - (2 * x + 3)) == 0
    assert sympy.simplify(parse_expression("sqrt(4)", table)) == 2


def test_figures_have_no_numeric_value(table):
    with pytest.raises(ConversionError):
        to_sympy(parse_logic_form("Triangle(A,B,C)"), table)


@pytest.mark.parametrize("value, text", [
    (sympy.Integer(3), "3"),
    (sympy.Rational(48, 5), "9.6"),
    (sympy.Rational(1, 3), "1/3"),
    (sympy.Float(2.5), "2.5"),
])
def test_format_number(value, text):
    assert format_number(value) == text


def test_equations_print_in_geometry_notation(table):
    text = format_equation(Equation(length("M", "N", table), 6))
    assert "MN" in text and "6" in text


def test_approximate_equations_compare_within_tolerance():
    close = Equation(sympy.Float(2.0000000001), 2)
    assert close.is_tautology and not close.is_contradiction
    assert Equation(sympy.Float(2.1), 2).is_contradiction
    assert Equation(sympy.Rational(2000000001, 1000000000), 2).is_contradiction
