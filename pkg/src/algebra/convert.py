"""
Convert formal-language arguments into sympy expressions and equations.
Path: src/algebra/convert.py
"""
from typing import Optional

import sympy
from lark import Transformer
from lark.exceptions import UnexpectedInput

from src.formal_lang import Expr, Literal, Point, print_literal
from src.formal_lang.catalog import QUANTITY_PREDICATES
from src.formal_lang.grammar import PARSER

from .equation import Equation
from .errors import ConversionError
from .functions import DEGREE_FUNCTIONS
from .symbols import DEFAULT_TABLE, SymbolTable

_TRIG_PREDICATES = {"SinOf": "sin", "CosOf": "cos", "TanOf": "tan", "CotOf": "cot"}


class _SympyBuilder(Transformer):
    """Expression parse tree -> unevaluated sympy expression (keeps 6+(3+3/5) visible)."""

    def __init__(self, table: SymbolTable):
        super().__init__()
        self.table = table

    def number(self, children):
        return sympy.Rational(str(children[0]))

    def pi(self, _children):
        return sympy.pi

    def variable(self, children):
        return self.table.user(str(children[0]).lstrip("\\"))

    def placeholder(self, _children):
        return self.table.placeholder()

    def add(self, children):
        return sympy.Add(children[0], children[1], evaluate=False)

    def sub(self, children):
        return sympy.Add(children[0], sympy.Mul(-1, children[1], evaluate=False), evaluate=False)

    def mul(self, children):
        return sympy.Mul(children[0], children[1], evaluate=False)

    def div(self, children):
        return sympy.Mul(children[0], sympy.Pow(children[1], -1, evaluate=False), evaluate=False)

    def frac(self, children):
        return self.div(children[1:])

    def neg(self, children):
        return sympy.Mul(-1, children[0], evaluate=False)

    def pow(self, children):
        return sympy.Pow(children[0], children[1], evaluate=False)

    def sqrt(self, children):
        return sympy.Pow(children[-1], sympy.Rational(1, 2), evaluate=False)

    def call(self, children):
        name, arg = str(children[0]), children[1]
        if name == "sqrt":
            return sympy.Pow(arg, sympy.Rational(1, 2), evaluate=False)
        return DEGREE_FUNCTIONS[name](arg, evaluate=False)


def parse_expression(text: str, table: Optional[SymbolTable] = None) -> sympy.Expr:
    """Parse expression text (the CFG's expr) into an unevaluated sympy tree."""
    try:
        tree = PARSER.parse(text, start="sum")
    except UnexpectedInput as e:
        raise ConversionError(f"cannot parse expression '{text}'") from e
    result = _SympyBuilder(table or DEFAULT_TABLE).transform(tree)
    if not isinstance(result, sympy.Basic):
        raise ConversionError(f"cannot parse expression '{text}'")
    return result


def to_sympy(arg, table: Optional[SymbolTable] = None) -> sympy.Expr:
    """
    Numeric meaning of a literal argument.

    Quantity literals become symbols, Table-6 arithmetic predicates become
    sympy operations, expression text is parsed.
    """
    table = table or DEFAULT_TABLE
    if isinstance(arg, Expr):
        return parse_expression(arg.text, table)
    if isinstance(arg, Point):
        raise ConversionError(f"point '{arg.name}' has no numeric value")
    if not isinstance(arg, Literal):
        raise ConversionError(f"unsupported argument {arg!r}")

    pred, args = arg.predicate, arg.args
    if pred in QUANTITY_PREDICATES:
        return table.quantity(arg)
    if pred in _TRIG_PREDICATES:
        return DEGREE_FUNCTIONS[_TRIG_PREDICATES[pred]](to_sympy(args[0], table), evaluate=False)
    values = [to_sympy(a, table) for a in args]
    if pred == "HalfOf":
        return sympy.Mul(sympy.Rational(1, 2), values[0], evaluate=False)
    if pred == "SqrtOf":
        return sympy.Pow(values[0], sympy.Rational(1, 2), evaluate=False)
    if pred in ("RatioOf", "Div"):
        return sympy.Mul(values[0], sympy.Pow(values[1], -1, evaluate=False), evaluate=False)
    if pred == "Add":
        return sympy.Add(*values, evaluate=False)
    if pred == "Mul":
        return sympy.Mul(*values, evaluate=False)
    if pred == "Sub":
        return sympy.Add(values[0], sympy.Mul(-1, values[1], evaluate=False), evaluate=False)
    if pred == "Pow":
        return sympy.Pow(values[0], values[1], evaluate=False)
    raise ConversionError(f"{print_literal(arg)} has no numeric value")


def is_equation_literal(lit: Literal) -> bool:
    """Equals(...) between two numeric terms (not e.g. figure identity)."""
    if lit.predicate != "Equals" or len(lit.args) != 2:
        return False
    try:
        to_sympy(lit.args[0])
        to_sympy(lit.args[1])
    except ConversionError:
        return False
    return True


def literal_to_equation(lit: Literal, table: Optional[SymbolTable] = None) -> Equation:
    """Equals(a, b) -> Equation a = b; user variables equated to a quantity inherit its domain."""
    if lit.predicate != "Equals":
        raise ConversionError(f"{print_literal(lit)} is not an equality")
    table = table or DEFAULT_TABLE
    lhs, rhs = (to_sympy(a, table) for a in lit.args)
    for var_side, other in ((lhs, rhs), (rhs, lhs)):
        if isinstance(var_side, sympy.Symbol) and table.is_user(var_side) and isinstance(other, sympy.Symbol):
            table.bind_domain(var_side, table.domain(other))
    return Equation(lhs, rhs, source=lit)
