"""
Quantity variables and the symbol table.
Path: src/algebra/symbols.py
"""
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

import sympy

from src.formal_lang import Literal, Point, canonicalize, parse_logic_form, print_literal
from src.formal_lang.errors import FormalLanguageError


class Domain(str, Enum):
    NONNEG_LENGTH = "nonneg_length"
    ANGLE = "angle_deg_0_180"
    ARC = "arc_deg_0_360"
    AREA = "area_nonneg"
    FREE = "free"


# (low, high); zero-size figures are degenerate so the lower bounds are exclusive
DOMAIN_BOUNDS = {
    Domain.NONNEG_LENGTH: (0.0, None),
    Domain.ANGLE: (0.0, 180.0),
    Domain.ARC: (0.0, 360.0),
    Domain.AREA: (0.0, None),
    Domain.FREE: (None, None),
}

_LENGTH_LIKE = {"LengthOf", "PerimeterOf", "RadiusOf", "DiameterOf", "CircumferenceOf", "SimRatio"}


@dataclass(frozen=True)
class QuantityVar:
    """A named unknown: a geometric quantity literal or a user variable"""
    symbol: sympy.Symbol
    origin: Optional[Literal]
    domain: Domain

    @property
    def name(self) -> str:
        return self.symbol.name

    @property
    def is_user(self) -> bool:
        return self.origin is None

    def admits(self, value: float, abs_tol: float = 1e-9) -> bool:
        low, high = DOMAIN_BOUNDS[self.domain]
        if low is not None and value <= low + abs_tol:
            return False
        if high is not None and value > high + abs_tol:
            return False
        return True


def normalize_quantity(lit: Literal) -> Literal:
    """Canonical quantity literal; circles are keyed by their center."""
    lit = canonicalize(lit)
    if lit.args and isinstance(lit.args[0], Literal):
        inner = lit.args[0]
        if inner.predicate == "Circle" and len(inner.args) == 2:
            return Literal(lit.predicate, (Literal("Circle", inner.args[:1]),) + lit.args[1:])
    return lit


def domain_of_literal(lit: Literal) -> Domain:
    if lit.predicate in _LENGTH_LIKE:
        return Domain.NONNEG_LENGTH
    if lit.predicate == "AreaOf":
        return Domain.AREA
    if lit.predicate == "MeasureOf" and lit.args and isinstance(lit.args[0], Literal):
        return Domain.ARC if lit.args[0].predicate == "Arc" else Domain.ANGLE
    return Domain.FREE


class SymbolTable:
    """
    Append-only bijection between canonical quantity literals and sympy symbols.

    Registration is guarded so concurrent solves may share one table.
    """

    def __init__(self):
        self._vars: Dict[str, QuantityVar] = {}
        self._lock = threading.Lock()
        self._placeholders = 0

    def _register(self, name: str, origin: Optional[Literal], domain: Domain) -> sympy.Symbol:
        with self._lock:
            var = self._vars.get(name)
            if var is None:
                var = QuantityVar(sympy.Symbol(name), origin, domain)
                self._vars[name] = var
            return var.symbol

    def quantity(self, lit: Literal) -> sympy.Symbol:
        lit = normalize_quantity(lit)
        return self._register(print_literal(lit), lit, domain_of_literal(lit))

    def user(self, name: str) -> sympy.Symbol:
        return self._register(name, None, Domain.FREE)

    def placeholder(self) -> sympy.Symbol:
        with self._lock:
            self._placeholders += 1
            n = self._placeholders
        return self.user(f"${n}")

    def var(self, symbol: sympy.Symbol) -> QuantityVar:
        """Look up a symbol, registering names minted elsewhere on first sight."""
        var = self._vars.get(symbol.name)
        if var is not None:
            return var
        origin = None
        if symbol.name[:1].isupper():
            try:
                parsed = parse_logic_form(symbol.name, allow_internal=True)
                if isinstance(parsed, Literal):
                    origin = parsed
            except FormalLanguageError:
                origin = None
        if origin is not None:
            self.quantity(origin)
        else:
            self.user(symbol.name)
        return self._vars[symbol.name]

    def origin(self, symbol: sympy.Symbol) -> Optional[Literal]:
        return self.var(symbol).origin

    def domain(self, symbol: sympy.Symbol) -> Domain:
        return self.var(symbol).domain

    def bind_domain(self, symbol: sympy.Symbol, domain: Domain) -> None:
        """Give a free user variable the domain of the quantity it names."""
        var = self.var(symbol)
        if var.domain is Domain.FREE and domain is not Domain.FREE:
            with self._lock:
                self._vars[symbol.name] = QuantityVar(var.symbol, var.origin, domain)

    def is_user(self, symbol: sympy.Symbol) -> bool:
        return self.var(symbol).is_user

    def __len__(self) -> int:
        return len(self._vars)


DEFAULT_TABLE = SymbolTable()


def quantity_symbol(lit: Literal, table: Optional[SymbolTable] = None) -> sympy.Symbol:
    return (table or DEFAULT_TABLE).quantity(lit)


def length(a: str, b: str, table: Optional[SymbolTable] = None) -> sympy.Symbol:
    return quantity_symbol(Literal("LengthOf", (Literal("Line", (Point(a), Point(b))),)), table)


def measure(a: str, b: str, c: str, table: Optional[SymbolTable] = None) -> sympy.Symbol:
    return quantity_symbol(Literal("MeasureOf", (Literal("Angle", (Point(a), Point(b), Point(c))),)), table)
