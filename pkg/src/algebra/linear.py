"""
Linear equation systems with minimal sufficient premise sets.
Path: src/algebra/linear.py

Nonlinear monomials (x**2, sin(x), a/b) are opaque atoms for elimination.
A row that mentions a single unknown after elimination is handed to the
univariate solver and its unique in-domain root is fed back as a new row.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import sympy
from sympy.core.sorting import default_sort_key

from .equation import Equation
from .errors import DomainEmpty, Inconsistent, NoRealSolution, NotApplicable
from .operations import solve_univariate
from .symbols import DEFAULT_TABLE, SymbolTable

logger = logging.getLogger(__name__)

Premises = Tuple[Equation, ...]


def _is_zero(value: sympy.Expr) -> bool:
    if value == 0:
        return True
    if value.is_number:
        if value.has(sympy.Float):
            return abs(complex(sympy.N(value))) < 1e-10
        return sympy.simplify(value) == 0
    return bool(value.is_zero)


def _clean(value: sympy.Expr) -> sympy.Expr:
    return value if value.is_Rational else sympy.simplify(value)


@dataclass(frozen=True)
class LinearForm:
    """Residual of an equation as {atom: coefficient} + constant (= 0)"""
    coeffs: Dict[sympy.Expr, sympy.Expr]
    const: sympy.Expr

    @classmethod
    def of(cls, eq: Equation) -> "LinearForm":
        coeffs, const = eq.linear_parts()
        return cls(coeffs, const)

    @property
    def atoms(self) -> FrozenSet[sympy.Expr]:
        return frozenset(self.coeffs)


def _column_order(table: SymbolTable):
    """Pivot preference: nonlinear atoms, then quantities, then user variables (kept free)."""
    def key(atom):
        if not isinstance(atom, sympy.Symbol):
            group = 0
        elif table.is_user(atom):
            group = 2
        else:
            group = 1
        return (group, default_sort_key(atom))
    return key


@dataclass
class EliminationBasis:
    """
    Reduced row echelon form of a set of linear forms.

    Args:
        columns: Atom order of the matrix columns (pivot preference order)
        rows: Nonzero RREF rows, each with len(columns) + 1 entries (constant last)
        pivots: Column index of each row's leading 1
    """
    columns: List[sympy.Expr]
    rows: List[List[sympy.Expr]] = field(default_factory=list)
    pivots: List[int] = field(default_factory=list)
    inconsistent: bool = False

    @classmethod
    def build(cls, forms: Sequence[LinearForm], table: SymbolTable) -> "EliminationBasis":
        atoms = set()
        for form in forms:
            atoms |= form.atoms
        columns = sorted(atoms, key=_column_order(table))
        index = {a: i for i, a in enumerate(columns)}
        width = len(columns) + 1
        data = []
        for form in forms:
            row = [sympy.S.Zero] * width
            for atom, coeff in form.coeffs.items():
                row[index[atom]] = coeff
            row[-1] = form.const
            data.append(row)
        basis = cls(columns)
        if not data:
            return basis
        reduced, pivots = sympy.Matrix(data).rref(iszerofunc=_is_zero)
        for r, p in enumerate(pivots):
            if p == len(columns):
                basis.inconsistent = True
                continue
            basis.rows.append([_clean(reduced[r, c]) for c in range(width)])
            basis.pivots.append(p)
        return basis

    def row_atoms(self, r: int) -> List[sympy.Expr]:
        return [self.columns[c] for c in range(len(self.columns)) if not _is_zero(self.rows[r][c])]

    def row_expr(self, r: int) -> sympy.Expr:
        """Σ coeff·atom + const of row r (the row says this expression is 0)."""
        row = self.rows[r]
        return sympy.Add(*[row[c] * a for c, a in enumerate(self.columns)], row[-1])

    def reduces(self, form: LinearForm) -> bool:
        """True iff form lies in the row space (so it follows from the basis)."""
        index = {a: i for i, a in enumerate(self.columns)}
        if any(a not in index for a in form.atoms):
            return False
        vec = [sympy.S.Zero] * (len(self.columns) + 1)
        for atom, coeff in form.coeffs.items():
            vec[index[atom]] = coeff
        vec[-1] = form.const
        for row, p in zip(self.rows, self.pivots):
            factor = vec[p]
            if _is_zero(factor):
                continue
            vec = [v - factor * rv for v, rv in zip(vec, row)]
        return all(_is_zero(v) for v in vec)

    def values(self) -> Dict[sympy.Symbol, sympy.Expr]:
        """Symbols pinned to a constant by a row with no other atom."""
        out = {}
        for r, p in enumerate(self.pivots):
            atom = self.columns[p]
            if isinstance(atom, sympy.Symbol) and len(self.row_atoms(r)) == 1:
                out[atom] = _clean(-self.rows[r][-1])
        return out

    def expression_for(self, var: sympy.Symbol) -> Optional[sympy.Expr]:
        """var as a linear expression of free plain symbols, if var is a pivot."""
        for r, p in enumerate(self.pivots):
            if self.columns[p] != var:
                continue
            others = [a for a in self.row_atoms(r) if a != var]
            if not all(isinstance(a, sympy.Symbol) for a in others):
                return None
            row = self.rows[r]
            return sympy.expand(-(row[-1] + sum(row[self.columns.index(a)] * a for a in others)))
        return None


class _Closure:
    """Elimination plus univariate feedback for one premise set."""

    def __init__(self, eqs: Sequence[Equation], table: SymbolTable):
        self.table = table
        self.inconsistent = any(eq.is_contradiction for eq in eqs)
        forms = [LinearForm.of(eq) for eq in eqs if not eq.is_tautology]
        solved: Dict[sympy.Symbol, sympy.Expr] = {}
        basis = EliminationBasis.build(forms, table)
        while not self.inconsistent and not basis.inconsistent:
            new = self._univariate(basis, solved)
            if not new:
                break
            solved.update(new)
            extra = [LinearForm({v: sympy.S.One}, -value) for v, value in solved.items()]
            basis = EliminationBasis.build(forms + extra, table)
        self.basis = basis
        self.inconsistent = self.inconsistent or basis.inconsistent

    def _univariate(self, basis: EliminationBasis, solved) -> Dict[sympy.Symbol, sympy.Expr]:
        known = basis.values()
        new = {}
        for r in range(len(basis.rows)):
            atoms = basis.row_atoms(r)
            symbols = set()
            for a in atoms:
                symbols |= a.free_symbols
            if len(symbols) != 1 or all(isinstance(a, sympy.Symbol) for a in atoms):
                continue
            var = next(iter(symbols))
            if var in known or var in solved or var in new:
                continue
            try:
                roots = solve_univariate(Equation(basis.row_expr(r), 0), var, self.table)
            except (DomainEmpty, NoRealSolution):
                self.inconsistent = True
                return {}
            except NotApplicable:
                continue
            if len(roots) == 1:
                new[var] = roots[0].rhs
        return new

    def derives(self, target: Equation) -> bool:
        if self.inconsistent:
            return False
        return self.basis.reduces(LinearForm.of(target))


class _Search:
    """Closures cached by premise set for one solve call."""

    def __init__(self, pool: Sequence[Equation], table: SymbolTable, limit: int):
        self.pool = sorted(pool, key=lambda e: e.key)
        self.table = table
        self.limit = limit
        self._cache: Dict[FrozenSet[str], _Closure] = {}

    def closure(self, eqs: Iterable[Equation]) -> _Closure:
        eqs = list(eqs)
        key = frozenset(e.key for e in eqs)
        if key not in self._cache:
            self._cache[key] = _Closure(eqs, self.table)
        return self._cache[key]

    def relevant(self, symbols: Iterable[sympy.Symbol]) -> List[Equation]:
        """Equations connected to the given symbols through shared unknowns."""
        frontier, seen, chosen = set(symbols), set(), []
        while frontier:
            seen |= frontier
            nxt = set()
            for eq in self.pool:
                if eq in chosen or not (eq.symbols & frontier):
                    continue
                chosen.append(eq)
                nxt |= eq.symbols - seen
            frontier = nxt
        return sorted(chosen, key=lambda e: e.key)

    def _shrink(self, candidates: List[Equation], ok) -> List[Equation]:
        """Inclusion-minimal subset by deletion, last equation first."""
        current = list(candidates)
        for eq in reversed(list(candidates)):
            trial = [e for e in current if e is not eq]
            if trial and ok(trial):
                current = trial
        return current

    def minimal(self, candidates: List[Equation], ok, required: FrozenSet[sympy.Symbol]) -> Premises:
        """
        Minimum-cardinality subset satisfying ok, by increasing cardinality.

        The greedy inclusion-minimal set bounds the search; a subset is only
        tested when it mentions every required symbol and every other symbol
        it mentions occurs in at least two of its equations.
        """
        upper = self._shrink(candidates, ok)
        if len(candidates) > self.limit:
            logger.debug("premise search over %d equations capped to greedy", len(candidates))
            return tuple(upper)
        for k in range(1, len(upper)):
            for combo in combinations(candidates, k):
                if not _plausible(combo, required):
                    continue
                if ok(list(combo)):
                    return tuple(combo)
        return tuple(upper)

    def premises_for(self, target: Equation) -> Premises:
        candidates = self.relevant(target.symbols)
        ok = lambda eqs: self.closure(eqs).derives(target)  # noqa: E731
        if not candidates or not ok(candidates):
            raise NotApplicable(f"'{target}' does not follow from the given equations")
        return self.minimal(candidates, ok, target.symbols)

    def infeasible(self) -> Premises:
        ok = lambda eqs: self.closure(eqs).inconsistent  # noqa: E731
        for eq in self.pool:
            if ok([eq]):
                return (eq,)
        return self.minimal(self.pool, ok, frozenset())


def _plausible(
combo: Sequence[Equation], required: FrozenSet[sympy.Symbol]) -> bool:
    counts: Dict[sympy.Symbol, int] = {}
    for eq in combo:
        for s in eq.symbols:
            counts[s] = counts.get(s, 0) + 1
    if not required <= set(counts):
        return False
    return all(n >= 2 for s, n in counts.items() if s not in required)


def minimal_premises(target: Equation, pool: Sequence[Equation],
                     table: Optional[SymbolTable] = None, limit: int = 24) -> Premises:
    """
    Smallest subset of pool from which target follows.

    Raises:
        NotApplicable: target does not follow from pool
    """
    return _Search(pool, table or DEFAULT_TABLE, limit).premises_for(target)


def minimal_infeasible(pool: Sequence[Equation], table: Optional[SymbolTable] = None,
                       limit: int = 24) -> Premises:
    """Smallest inconsistent subset of pool (pool itself must be inconsistent)."""
    return _Search(pool, table or DEFAULT_TABLE, limit).infeasible()


def solve_linear_system(eqs: Sequence[Equation], express: Iterable[sympy.Symbol] = (),
                        table: Optional[SymbolTable] = None,
                        limit: int = 24) -> List[Tuple[Equation, Premises]]:
    """
    Derive every new binding (and requested linear expressions) with minimal premises.

    Args:
        eqs: Known equations
        express: Symbols to express through the free user variables (v = 5 + x)
            when they are not pinned to a value
        table: Symbol table for domains
        limit: Above this many relevant equations premise sets are only
            inclusion-minimal

    Returns:
        (derived equation, minimal premise set) pairs, in symbol-name order

    Raises:
        Inconsistent: the system has no solution; premises is a minimal infeasible subset
        NotApplicable: nothing new follows
    """
    table = table or DEFAULT_TABLE
    unique = {}
    for eq in eqs:
        if not eq.is_tautology:
            unique.setdefault(eq.key, eq)
    pool = [unique[k] for k in sorted(unique)]
    search = _Search(pool, table, limit)
    closure = search.closure(pool)
    if closure.inconsistent:
        premises = search.infeasible()
        raise Inconsistent("equations " + "; ".join(str(e) for e in premises) + " have no common solution",
                           premises)

    existing = set(unique)
    derived: List[Equation] = []
    values = closure.basis.values()
    for var in sorted(values, key=lambda s: s.name):
        derived.append(Equation(var, values[var]))
    for var in sorted(set(express) - set(values), key=lambda s: s.name):
        expr = closure.basis.expression_for(var)
        if expr is not None and expr.free_symbols and all(table.is_user(s) for s in expr.free_symbols):
            derived.append(Equation(var, expr))

    results = []
    for eq in derived:
        if eq.key in existing:
            continue
        existing.add(eq.key)
        results.append((eq, search.premises_for(eq)))
    if not results:
        raise NotApplicable("nothing new follows from the linear system")
    return results
