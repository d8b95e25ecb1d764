from .convert import is_equation_literal, literal_to_equation, parse_expression, to_sympy
from .equation import Equation, canonical_residual
from .errors import (
    AlgebraError, ConversionError, DomainEmpty, Inconsistent, NoRealSolution, NotApplicable,
)
from .linear import minimal_infeasible, minimal_premises, solve_linear_system
from .numeric import numeric_check
from .operations import (
    CONSTANT_EVALUATION, SOLVE_LINEAR, SOLVE_UNIVARIATE, SUBSTITUTION, TRANSITIVITY,
    Derivation, evaluate_constants, solve_univariate, substitute, substitute_many,
)
from .printing import format_equation, format_expr
from .symbols import DEFAULT_TABLE, Domain, QuantityVar, SymbolTable, length, measure, quantity_symbol
