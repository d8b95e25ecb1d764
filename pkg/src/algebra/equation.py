"""
Equations with canonical residuals.
Path: src/algebra/equation.py
"""
from typing import Dict, FrozenSet, Optional, Tuple

import sympy
from sympy.core.sorting import default_sort_key


def _split_term(term: sympy.Expr) -> Tuple[sympy.Expr, sympy.Expr]:
    """term -> (constant coefficient, monomial atom); atom is 1 for constants."""
    if not term.free_symbols:
        return term, sympy.S.One
    return term.as_independent(*term.free_symbols, as_Add=False)


def linear_parts(expr: sympy.Expr) -> Tuple[Dict[sympy.Expr, sympy.Expr], sympy.Expr]:
    """
    Split an expression into {atom: coefficient} plus a constant.

    Atoms are monomials in the unknowns; anything that is not a bare Symbol
    (x**2, sind(x), a/b) is an opaque atom for linear elimination.
    """
    coeffs: Dict[sympy.Expr, sympy.Expr] = {}
    const = sympy.S.Zero
    for term in sympy.Add.make_args(sympy.expand(expr)):
        coeff, atom = _split_term(term)
        if atom == 1:
            const += coeff
        else:
            coeffs[atom] = coeffs.get(atom, sympy.S.Zero) + coeff
    coeffs = {a: c for a, c in coeffs.items() if sympy.expand(c) != 0}
    return coeffs, const


def canonical_residual(expr: sympy.Expr) -> sympy.Expr:
    """Expanded lhs-rhs scaled so its leading unknown term has coefficient 1."""
    residual = sympy.expand(sympy.sympify(expr).doit())
    if residual == 0 or not residual.free_symbols:
        return residual
    coeffs, _ = linear_parts(residual)
    if not coeffs:
        return residual
    lead = min(coeffs, key=default_sort_key)
    return sympy.expand(residual / coeffs[lead])


# equality tolerance for approximate (Float-carrying) equations
REL_TOL = 1e-6
ABS_TOL = 1e-9


def set_tolerance(rel_tol: float, abs_tol: float) -> None:
    global REL_TOL, ABS_TOL
    REL_TOL, ABS_TOL = float(rel_tol), float(abs_tol)


def _magnitude(expr: sympy.Expr) -> Optional[float]:
    try:
        return abs(complex(sympy.N(expr)))
    except (TypeError, ValueError):
        return None


class Equation:
    """
    lhs = rhs as displayed, plus the canonical residual used for identity.

    Two equations with equal residuals are the same equation.
    """

    __slots__ = ("lhs", "rhs", "residual", "key", "approximate", "source")

    def __init__(self, lhs, rhs, approximate: bool = False, source=None):
        self.lhs = sympy.sympify(lhs)
        self.rhs = sympy.sympify(rhs)
        self.residual = canonical_residual(self.lhs - self.rhs)
        self.key = "Eq[" + sympy.sstr(self.residual, order="lex") + "]"
        self.approximate = approximate or self.residual.has(sympy.Float)
        self.source = source

    # identity

    def __eq__(self, other) -> bool:
        return isinstance(other, Equation) and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Equation({sympy.sstr(self.lhs)} = {sympy.sstr(self.rhs)})"

    def __str__(self) -> str:
        return f"{sympy.sstr(self.lhs)} = {sympy.sstr(self.rhs)}"

    # structure

    @property
    def symbols(self) -> FrozenSet[sympy.Symbol]:
        return frozenset(self.residual.free_symbols)

    def _within_tolerance(self) -> bool:
        """Approximate constant residual no larger than the tolerance at the sides' scale."""
        if not self.approximate or self.residual.free_symbols:
            return False
        size = _magnitude(self.residual)
        if size is None:
            return False
        scale = max((m for m in (_magnitude(self.lhs), _magnitude(self.rhs)) if m is not None), default=0.0)
        return size <= max(REL_TOL * scale, ABS_TOL)

    @property
    def is_tautology(self) -> bool:
        return self.residual == 0 or self._within_tolerance()

    @property
    def is_contradiction(self) -> bool:
        """Constant nonzero residual: the equation can never hold."""
        return self.residual != 0 and not self.residual.free_symbols and not self._within_tolerance()

    def linear_parts(self):
        return linear_parts(self.residual)

    @property
    def is_linear(self) -> bool:
        coeffs, _ = self.linear_parts()
        return all(isinstance(atom, sympy.Symbol) for atom in coeffs)

    def binding(self) -> Optional[Tuple[sympy.Symbol, sympy.Expr]]:
        """(v, value) when the equation pins one symbol to a constant."""
        coeffs, const = self.linear_parts()
        if len(coeffs) != 1:
            return None
        atom, coeff = next(iter(coeffs.items()))
        if not isinstance(atom, sympy.Symbol):
            return None
        return atom, sympy.simplify(-const / coeff)

    def isolated(self) -> Optional[Tuple[sympy.Symbol, sympy.Expr]]:
        """(v, e) when one side is a bare symbol v that does not occur in e."""
        for side, other in ((self.lhs, self.rhs), (self.rhs, self.lhs)):
            if isinstance(side, sympy.Symbol) and side not in other.free_symbols:
                return side, other
        return None

    def with_sides(self, lhs, rhs, approximate: Optional[bool] = None) -> "Equation":
        return Equation(lhs, rhs, self.approximate if approximate is None else approximate)
