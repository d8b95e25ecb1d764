"""
Randomized numeric check of equations.
Path: src/algebra/numeric.py
"""
from typing import Dict, Iterable, Optional, Sequence

import numpy as np
import sympy

from .equation import Equation
from .functions import NUMPY_NAMESPACE
from .operations import solved_for
from .symbols import DEFAULT_TABLE, Domain, SymbolTable

# sampling ranges per domain (open on the left, degenerate zero-size values excluded)
_SAMPLE_RANGES = {
    Domain.NONNEG_LENGTH: (0.5, 50.0),
    Domain.ANGLE: (1.0, 179.0),
    Domain.ARC: (1.0, 359.0),
    Domain.AREA: (0.5, 500.0),
    Domain.FREE: (-50.0, 50.0),
}


def _evaluate(expr: sympy.Expr, values: Dict[sympy.Symbol, float]) -> float:
    symbols = sorted(expr.free_symbols, key=lambda s: s.name)
    f = sympy.lambdify(symbols, expr, modules=[NUMPY_NAMESPACE, "numpy"])
    with np.errstate(all="ignore"):
        return float(f(*[values[s] for s in symbols]))


def sample_assignment(symbols: Iterable[sympy.Symbol], rng: np.random.Generator,
                      table: Optional[SymbolTable] = None) -> Dict[sympy.Symbol, float]:
    table = table or DEFAULT_TABLE
    out = {}
    for s in sorted(symbols, key=lambda s: s.name):
        low, high = _SAMPLE_RANGES[table.domain(s)]
        out[s] = float(rng.uniform(low, high))
    return out


def _satisfy(premises: Sequence[Equation], values: Dict[sympy.Symbol, float], fixed=()) -> None:
    """Give each premise its own variable and recompute those until every premise holds."""
    pinned = set(fixed)
    designated = []
    for eq in premises:
        for var in sorted(eq.symbols - pinned, key=lambda s: s.name):
            value = solved_for(eq, var)
            if value is not None:
                designated.append((var, value))
                pinned.add(var)
                break
    for _ in range(len(designated) + 1):
        for var, value in designated:
            values[var] = _evaluate(value, values) if value.free_symbols else float(value)


def numeric_check(eq: Equation, trials: int = 100, *, premises: Sequence[Equation] = (),
                  given: Optional[Dict[sympy.Symbol, float]] = None, seed: int = 0,
                  abs_tol: float = 1e-9, table: Optional[SymbolTable] = None) -> bool:
    """
    True iff lhs and rhs agree at `trials` random in-domain assignments.

    Args:
        eq: Equation to check
        trials: Number of random assignments
        premises: Equations the assignment is forced to satisfy (soundness checks
            of derived equations)
        given: Fixed values for some symbols
        seed: RNG seed
        abs_tol: Tolerance on |lhs - rhs|, scaled by the magnitude of the sides
    """
    rng = np.random.default_rng(seed)
    symbols = set(eq.lhs.free_symbols | eq.rhs.free_symbols)
    for p in premises:
        symbols |= p.symbols
    for _ in range(max(1, trials)):
        values = sample_assignment(symbols, rng, table)
        values.update(given or {})
        _satisfy(premises, values, fixed=(given or {}).keys())
        lhs = _evaluate(eq.lhs, values) if eq.lhs.free_symbols else float(eq.lhs)
        rhs = _evaluate(eq.rhs, values) if eq.rhs.free_symbols else float(eq.rhs)
        if not (np.isfinite(lhs) and np.isfinite(rhs)):
            return False
        if abs(lhs - rhs) > abs_tol * max(1.0, abs(lhs), abs(rhs)):
            return False
    return True
