"""
Atomic algebraic operations: substitution, constant evaluation and
univariate solving.
Path: src/algebra/operations.py
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from scipy.optimize import bisect, minimize_scalar

from .equation import Equation
from .errors import DomainEmpty, NoRealSolution, NotApplicable
from .functions import NUMPY_NAMESPACE, _DegreeTrig
from .symbols import DEFAULT_TABLE, DOMAIN_BOUNDS, Domain, SymbolTable

logger = logging.getLogger(__name__)

SUBSTITUTION = "Substitution"
TRANSITIVITY = "Transitivity of Equivalence"
CONSTANT_EVALUATION = "Constant Evaluation"
SOLVE_UNIVARIATE = "Solve Univariate Equation"
SOLVE_LINEAR = "Solve Linear Equation System"

# float output precision of folded / numerically solved values
_DIGITS = 15


@dataclass(frozen=True)
class Derivation:
    """One syllogistic algebra step: premises --theorem--> conclusions"""
    theorem: str
    premises: Tuple[Equation, ...]
    conclusions: Tuple[Equation, ...]


def _replace(expr: sympy.Expr, mapping: Dict[sympy.Symbol, sympy.Expr]) -> sympy.Expr:
    """Structure-preserving replacement (no evaluation of the rebuilt tree)."""
    if expr in mapping:
        return mapping[expr]
    if not expr.args:
        return expr
    args = [_replace(a, mapping) for a in expr.args]
    if all(a is b for a, b in zip(args, expr.args)):
        return expr
    if isinstance(expr, (sympy.Add, sympy.Mul, sympy.Pow)) or isinstance(expr, sympy.Function):
        return expr.func(*args, evaluate=False)
    return expr.func(*args)


def solved_for(eq: Equation, var: sympy.Symbol) -> Optional[sympy.Expr]:
    """e such that eq is equivalent to var = e, when var occurs linearly."""
    iso = eq.isolated()
    if iso is not None and iso[0] == var:
        return iso[1]
    residual = eq.residual
    if var not in residual.free_symbols:
        return None
    coeff = residual.coeff(var, 1)
    rest = sympy.expand(residual - coeff * var)
    if coeff == 0 or var in coeff.free_symbols or var in rest.free_symbols:
        return None
    return sympy.simplify(-rest / coeff)


def substitute(target: Equation, source: Equation, var: Optional[sympy.Symbol] = None) -> Equation:
    """
    Replace a variable of target by its value according to source.

    Args:
        target: Equation to rewrite
        source: Equation of shape v = e (or e = v, or linear in v)
        var: The v to eliminate; chosen from source's isolated side when omitted

    Returns:
        The rewritten equation

    Raises:
        NotApplicable: no shared replaceable symbol, or the result says nothing
    """
    candidates: List[sympy.Symbol]
    if var is not None:
        candidates = [var]
    else:
        iso = source.isolated()
        shared = sorted(source.symbols & target.symbols, key=lambda s: s.name)
        candidates = ([iso[0]] if iso is not None else []) + [s for s in shared if iso is None or s != iso[0]]

    target_free = target.lhs.free_symbols | target.rhs.free_symbols
    for v in candidates:
        if v not in target_free:
            continue
        value = solved_for(source, v)
        if value is None:
            continue
        mapping = {v: value}
        result = Equation(
            _replace(target.lhs, mapping), _replace(target.rhs, mapping),
            approximate=target.approximate or source.approximate,
        )
        if result.is_tautology or result.key == target.key:
            continue
        return result
    raise NotApplicable(f"no shared replaceable symbol between '{target}' and '{source}'")


def substitute_many(target: Equation, sources: Sequence[Equation]) -> Tuple[Equation, List[Equation]]:
    """Apply every applicable source in order; returns the result and the sources used."""
    current, used = target, []
    for source in sources:
        try:
            current = substitute(current, source)
        except NotApplicable:
            continue
        used.append(source)
    if not used:
        raise NotApplicable(f"nothing to substitute into '{target}'")
    return current, used


def _fold_value(expr: sympy.Expr) -> Tuple[sympy.Expr, bool]:
    """Value of a constant subtree and whether it had to be approximated."""
    exact = sympy.simplify(expr.doit())
    if exact.is_Rational:
        return exact, False
    if exact.is_real is False or exact.is_finite is False:
        return expr, False
    approx = sympy.N(exact, _DIGITS + 5)
    if not approx.is_Number:
        return expr, False
    return sympy.Float(approx, _DIGITS), True


def _fold(expr: sympy.Expr) -> Tuple[sympy.Expr, bool, bool]:
    """(folded, changed, approximated)"""
    if expr.is_Atom:
        return expr, False, False
    if not expr.free_symbols:
        value, approx = _fold_value(expr)
        return value, value is not expr, approx
    changed = approx = False
    args = []
    for a in expr.args:
        f, c, ap = _fold(a)
        args.append(f)
        changed, approx = changed or c, approx or ap
    if not changed:
        return expr, False, False
    if isinstance(expr, (sympy.Add, sympy.Mul, sympy.Pow)) or isinstance(expr, sympy.Function):
        return expr.func(*args, evaluate=False), True, approx
    return expr.func(*args), True, approx


def evaluate_constants(eq: Equation) -> Equation:
    """
    Fold every constant compound subterm.

    Rational results stay exact; trig values, radicals and π are replaced
    by 15-digit floats and the result is tagged approximate.

    Raises:
        NotApplicable: nothing to fold, or the equation is an identity
    """
    if eq.is_tautology:
        raise NotApplicable(f"'{eq}' is an identity")
    lhs, c1, a1 = _fold(eq.lhs)
    rhs, c2, a2 = _fold(eq.rhs)
    if not (c1 or c2):
        raise NotApplicable(f"'{eq}' has no constant subterm to fold")
    return Equation(lhs, rhs, approximate=eq.approximate or a1 or a2)


def is_approximable(eq: Equation) -> bool:
    """True when folding would replace an exact irrational constant by a float."""
    try:
        folded = evaluate_constants(eq)
    except NotApplicable:
        return False
    return folded.approximate and not eq.approximate


# univariate solving

def search_bounds(domain: Domain, expr: sympy.Expr) -> Tuple[float, float]:
    """Closed search interval for numeric root finding on a variable's domain."""
    consts = [abs(float(n)) for n in expr.atoms(sympy.Number) if n.is_finite]
    span = max([1e4] + [10.0 * c for c in consts])
    low, high = DOMAIN_BOUNDS[domain]
    return (-span if low is None else float(low)), (span if high is None else float(high))


def _snap(value: float, f, abs_tol: float) -> Tuple[sympy.Expr, bool]:
    """Snap a float root to a nearby simple rational when that is also a root."""
    candidate = sympy.nsimplify(value, rational=True, tolerance=1e-9)
    if candidate.is_Rational and candidate.q <= 1000:
        try:
            if abs(float(f(float(candidate)))) <= abs_tol:
                return candidate, False
        except (ZeroDivisionError, ValueError, OverflowError):
            pass
    return sympy.Float(value, _DIGITS), True


def _polynomial_roots(numer: sympy.Expr, var: sympy.Symbol) -> Optional[List[Tuple[sympy.Expr, bool]]]:
    try:
        poly = sympy.Poly(numer, var)
    except sympy.PolynomialError:
        return None
    coeffs = poly.all_coeffs()
    if poly.degree() < 1:
        return []
    if not all(c.is_number for c in coeffs):
        return None
    if poly.degree() <= 2:
        out = []
        for r in sorted(set(sympy.roots(poly, multiple=True)), key=sympy.default_sort_key):
            r = sympy.simplify(r)
            if r.is_real:
                out.append((r, r.has(sympy.Float)))
        return out
    if not all(c.is_Rational for c in coeffs):
        return None
    out = []
    for r in poly.real_roots():
        if r.is_Rational:
            out.append((r, False))
        else:
            out.append((sympy.Float(r.evalf(_DIGITS + 5), _DIGITS), True))
    return out


def _numeric_roots(expr: sympy.Expr, var: sympy.Symbol, domain: Domain,
                   cells: int, xtol: float, abs_tol: float) -> List[Tuple[sympy.Expr, bool]]:
    f = sympy.lambdify(var, expr, modules=[NUMPY_NAMESPACE, "numpy"])
    low, high = search_bounds(domain, expr)
    grid = np.linspace(low, high, cells + 1)
    with np.errstate(all="ignore"):
        values = np.asarray(f(grid), dtype=float) * np.ones_like(grid)

    found: List[float] = []
    finite = np.isfinite(values)
    for i in range(cells):
        a, b = grid[i], grid[i + 1]
        fa, fb = values[i], values[i + 1]
        if not (finite[i] and finite[i + 1]):
            continue
        if fa == 0.0:
            found.append(a)
        elif fa * fb < 0:
            mid = float(f((a + b) / 2))
            if not np.isfinite(mid) or abs(mid) > max(abs(fa), abs(fb)):
                continue  # pole, not a root
            found.append(bisect(f, a, b, xtol=xtol))
    if finite[-1] and values[-1] == 0.0:
        found.append(high)

    # tangential roots (double roots) show up as near-zero local minima of |f|
    mags = np.where(finite, np.abs(values), np.inf)
    for i in range(1, cells):
        if mags[i] <= mags[i - 1] and mags[i] <= mags[i + 1] and mags[i] < 1e-2:
            res = minimize_scalar(lambda t: abs(float(f(t))), bounds=(grid[i - 1], grid[i + 1]),
                                  method="bounded", options={"xatol": xtol})
            if res.success and abs(float(f(res.x))) <= abs_tol:
                found.append(float(res.x))

    roots: List[float] = []
    for r in sorted(found):
        if not roots or abs(r - roots[-1]) > 1e-7:
            roots.append(float(r))
    return [_snap(r, f, abs_tol) for r in roots]


def solve_univariate(eq: Equation, var: Optional[sympy.Symbol] = None,
                     table: Optional[SymbolTable] = None, *, cells: int = 1024,
                     xtol: float = 1e-12, abs_tol: float = 1e-9) -> List[Equation]:
    """
    All real roots of a one-unknown equation that respect the unknown's domain.

    Polynomials of degree <= 2 are solved in closed form; everything else
    is bracketed on a grid over the domain and bisected.

    Raises:
        NotApplicable: the equation does not have exactly one unknown
        NoRealSolution: no real root at all
        DomainEmpty: roots exist, none inside the domain
    """
    table = table or DEFAULT_TABLE
    symbols = eq.symbols
    if var is None:
        if len(symbols) != 1:
            raise NotApplicable(f"'{eq}' has {len(symbols)} unknowns")
        var = next(iter(symbols))
    if symbols != {var}:
        raise NotApplicable(f"'{eq}' is not univariate in {var}")

    qvar = table.var(var)
    expr = eq.residual
    numer, denom = sympy.together(expr).as_numer_denom()

    roots = None
    if not expr.has(_DegreeTrig):
        roots = _polynomial_roots(sympy.expand(numer), var)
    if roots is None:
        roots = _numeric_roots(expr, var, qvar.domain, cells, xtol, abs_tol)
    else:
        roots = [(r, ap) for r, ap in roots if denom.subs(var, r) != 0]

    if not roots:
        raise NoRealSolution(f"'{eq}' has no real solution")
    admitted = [(r, ap) for r, ap in roots if qvar.admits(float(r), abs_tol)]
    if not admitted:
        raise DomainEmpty(
            f"every root of '{eq}' violates the {qvar.domain.value} domain of {var}",
            [r for r, _ in roots],
        )
    logger.debug("solve_univariate %s -> %s", eq, [str(r) for r, _ in admitted])
    return [Equation(var, r, approximate=eq.approximate or ap) for r, ap in admitted]
