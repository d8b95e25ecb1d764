"""
Human-readable printing of expressions and equations.
Path: src/algebra/printing.py

Quantity symbols print in geometry notation (LengthOf(Line(M,N)) -> MN),
terminating rationals as decimals (48/5 -> 9.6), the argument order of
unevaluated trees is kept so "6 + (3 + 3/5)" reads the way it was derived.
"""
from decimal import Decimal, localcontext
from functools import lru_cache

import sympy

from src.formal_lang import Literal, parse_logic_form, render_literal
from src.formal_lang.errors import FormalLanguageError

from .functions import _DegreeTrig

_ADD, _MUL, _POW, _ATOM = 10, 20, 30, 40


@lru_cache(maxsize=4096)
def symbol_label(name: str, ascii: bool = False) -> str:
    """Display name of a quantity or user symbol."""
    if name.startswith("$"):
        return "$"
    if not name[:1].isupper():
        return name
    try:
        origin = parse_logic_form(name, allow_internal=True)
    except FormalLanguageError:
        return name
    return render_literal(origin, ascii) if isinstance(origin, Literal) else name


def _terminates(q: int) -> bool:
    for f in (2, 5):
        while q % f == 0:
            q //= f
    return q == 1


def format_number(value, ascii: bool = False) -> str:
    """Integers as is, terminating rationals as decimals, floats to 6 places."""
    if isinstance(value, sympy.Integer):
        return str(int(value))
    if isinstance(value, sympy.Rational):
        p, q = int(value.p), int(value.q)
        if _terminates(q):
            with localcontext() as ctx:
                ctx.prec = 50
                return format(Decimal(p) / Decimal(q), "f")
        return f"{p}/{q}"
    if isinstance(value, sympy.Float):
        text = f"{float(value):.6f}".rstrip("0").rstrip(".")
        return "0" if text in ("-0", "") else text
    return sympy.sstr(value)


def _precedence(e) -> int:
    if e.is_Add:
        return _ADD
    if e.is_Mul:
        return _MUL
    if isinstance(e, sympy.Rational) and not e.is_Integer:
        return _ATOM if _terminates(int(e.q)) else _MUL
    if e.is_Number and e.is_negative:
        return _ADD
    if e.is_Pow:
        return _POW
    return _ATOM


def _wrap(e, ascii: bool, floor: int) -> str:
    text = _fmt(e, ascii)
    return f"({text})" if _precedence(e) < floor else text


def _negative(term) -> bool:
    if term.is_Number:
        return bool(term.is_negative)
    if term.is_Mul and term.args and term.args[0].is_Number:
        return bool(term.args[0].is_negative)
    return False


def _negate(term):
    if term.is_Number:
        return -term
    coeff, rest = -term.args[0], list(term.args[1:])
    if coeff == 1 and rest:
        return rest[0] if len(rest) == 1 else sympy.Mul(*rest, evaluate=False)
    return sympy.Mul(coeff, *rest, evaluate=False)


def _fmt_add(e, ascii):
    parts = []
    for i, term in enumerate(e.args):
        if i and _negative(term):
            parts.append(" - " + _wrap(_negate(term), ascii, _MUL))
        elif i:
            parts.append(" + " + _wrap(term, ascii, _ADD + 1))
        else:
            parts.append(_wrap(term, ascii, _ADD))
    return "".join(parts)


def _fmt_mul(e, ascii):
    num, den = [], []
    args = list(e.args)
    sign = ""
    if args and args[0].is_Number:
        coeff = args.pop(0)
        if coeff.is_negative:
            sign, coeff = "-", -coeff
        if isinstance(coeff, sympy.Rational) and not coeff.is_Integer and args:
            if coeff.p != 1:
                num.append(sympy.Integer(coeff.p))
            den.append(sympy.Integer(coeff.q))
        elif coeff != 1 or not args:
            num.append(coeff)
    for f in args:
        if f.is_Pow and f.exp.is_Rational and f.exp.is_negative:
            den.append(f.base if f.exp == -1 else sympy.Pow(f.base, -f.exp, evaluate=False))
        else:
            num.append(f)
    num_text = "*".join(_wrap(f, ascii, _MUL + 1 if i else _MUL) for i, f in enumerate(num)) or "1"
    if not den:
        return sign + num_text
    if len(den) == 1:
        den_text = _wrap(den[0], ascii, _POW)
    else:
        den_text = "(" + "*".join(_wrap(f, ascii, _MUL) for f in den) + ")"
    if len(num) > 1:
        num_text = f"({num_text})"
    return f"{sign}{num_text}/{den_text}"


def _fmt_pow(e, ascii):
    base, exp = e.args
    if exp == sympy.Rational(1, 2):
        return ("sqrt" if ascii else "√") + f"({_fmt(base, ascii)})"
    if exp == -1:
        return f"1/{_wrap(base, ascii, _POW)}"
    return f"{_wrap(base, ascii, _POW + 1)}^{_wrap(exp, ascii, _ATOM)}"


def _fmt(e, ascii: bool) -> str:
    if isinstance(e, sympy.Symbol):
        return symbol_label(e.name, ascii)
    if e is sympy.pi:
        return "pi" if ascii else "π"
    if e.is_Number:
        return format_number(e, ascii)
    if e.is_Add:
        return _fmt_add(e, ascii)
    if e.is_Mul:
        return _fmt_mul(e, ascii)
    if e.is_Pow:
        return _fmt_pow(e, ascii)
    if isinstance(e, _DegreeTrig):
        return f"{e._label}({_fmt(e.args[0], ascii)})"
    return sympy.sstr(e)


def format_expr(expr, ascii: bool = False) -> str:
    return _fmt(sympy.sympify(expr), ascii)


def format_equation(eq, ascii: bool = False) -> str:
    """lhs = rhs of an Equation in display notation."""
    return f"{format_expr(eq.lhs, ascii)} = {format_expr(eq.rhs, ascii)}"
