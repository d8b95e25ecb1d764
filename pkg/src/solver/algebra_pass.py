"""
Algebraic expansion of the proof hypergraph.
Path: src/solver/algebra_pass.py

Each round runs the atomic operations over the current equation nodes:
linear elimination (with minimal premises), substitution of known values
and linear expressions into nonlinear equations, univariate solving and
folding of constant trig values. Every derivation becomes one hyperedge.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

import sympy

from src.algebra import (
    CONSTANT_EVALUATION, SOLVE_LINEAR, SOLVE_UNIVARIATE, SUBSTITUTION, TRANSITIVITY,
    AlgebraError, DomainEmpty, Equation, Inconsistent, NoRealSolution, NotApplicable, SymbolTable,
    evaluate_constants, solve_linear_system, solve_univariate, substitute_many,
)
from src.algebra.equation import linear_parts
from src.algebra.functions import DEGREE_FUNCTIONS
from src.algebra.symbols import DEFAULT_TABLE
from src.hypergraph.graph import Contradiction, ProofHypergraph, Rejected

logger = logging.getLogger(__name__)

MAX_ROUNDS = 16


@dataclass
class RootChoice:
    """
    Several in-domain roots of one equation, each concluded by its own edge.
    The solver follows one root at a time and moves on when a contradiction
    depends on it.
    """
    source: str
    symbol: str
    edges: List[int]
    values: List[sympy.Expr]
    active: int = 0
    refuted: Set[int] = field(default_factory=set)

    @property
    def active_edge(self) -> int:
        return self.edges[self.active]

    def inactive_edges(self) -> List[int]:
        return [e for i, e in enumerate(self.edges) if i != self.active]

    def advance(self) -> bool:
        """Refute the followed root; False when every root is refuted."""
        self.refuted.add(self.active)
        for i in range(len(self.edges)):
            if i not in self.refuted:
                self.active = i
                return True
        return False

    def reset(self) -> None:
        self.active = 0
        self.refuted.clear()


@dataclass
class AlgebraState:
    """
    Root choices made so far, in the order they were made, and the
    contradictions no choice explains.
    """
    choices: List[RootChoice] = field(default_factory=list)
    unexplained: List[Contradiction] = field(default_factory=list)
    switches: int = 0

    def excluded_edges(self) -> Set[int]:
        return {e for c in self.choices for e in c.inactive_edges()}

    def visible(self, g: ProofHypergraph) -> Set[str]:
        """Nodes of the branch currently followed."""
        return g.reachable(self.excluded_edges())

    def hidden(self, g: ProofHypergraph) -> Set[str]:
        return set(g.nodes) - self.visible(g)

    def has_choice(self, source: str) -> bool:
        return any(c.source == source for c in self.choices)

    def alternatives(self, g: ProofHypergraph) -> Dict[str, List[sympy.Expr]]:
        """Roots not followed, per symbol whose choice lies on the current branch."""
        visible = self.visible(g)
        return {
            c.symbol: [v for i, v in enumerate(c.values) if i != c.active]
            for c in self.choices if c.source in visible
        }

    def _blame(self, g: ProofHypergraph, premises: Set[str], limit: int) -> Optional[int]:
        """Latest choice below limit whose followed root the premises depend on."""
        excluded = self.excluded_edges()
        for i in reversed(range(limit)):
            if not premises <= g.reachable(excluded | {self.choices[i].active_edge}):
                return i
        return None

    def prune(self, g: ProofHypergraph) -> bool:
        """
        Backtrack over root choices until no contradiction lies on the followed branch.

        A contradiction is blamed on the latest choice it depends on; that
        choice moves to its next root and later choices start over. When a
        choice runs out of roots the blame passes to the choices its source
        equation depends on.

        Returns:
            False when a contradiction remains that no choice explains
        """
        if self.unexplained:
            return False
        while True:
            visible = self.visible(g)
            pending = [c for c in g.contradictions if set(c.premises) <= visible]
            if not pending:
                return True
            found = pending[0]
            premises, limit = set(found.premises), len(self.choices)
            while True:
                idx = self._blame(g, premises, limit)
                if idx is None:
                    self.unexplained.append(found)
                    return False
                choice = self.choices[idx]
                for later in self.choices[idx + 1:]:
                    later.reset()
                dropped = choice.values[choice.active]
                if choice.advance():
                    self.switches += 1
                    logger.info("%s = %s refuted (%s); trying %s", choice.symbol, dropped, found.message,
                                choice.values[choice.active])
                    break
                premises, limit = {choice.source}, idx


def _pool(g: ProofHypergraph, visible: Set[str]) -> List[Tuple[str, Equation]]:
    return sorted((k, v) for k, v in g.equations() if k in visible)


def _bindings(pool: Sequence[Tuple[str, Equation]]) -> Dict[sympy.Symbol, Equation]:
    out: Dict[sympy.Symbol, Equation] = {}
    for _, eq in pool:
        bound = eq.binding()
        if bound is None or bound[1].free_symbols:
            continue
        known = out.get(bound[0])
        if known is None or (known.approximate and not eq.approximate):
            out[bound[0]] = eq
    return out


def _add(g: ProofHypergraph, pool, premises: Sequence[Equation], label: str, conclusion: Equation) -> bool:
    if any(key == conclusion.key for key, _ in pool):
        return False
    result = g.add_step(premises, label, [conclusion])
    if isinstance(result, Rejected):
        logger.debug("%s rejected: %s", label, result.reason)
        return False
    return True


def _contradiction(g: ProofHypergraph, premises: Sequence[Equation], message: str) -> None:
    g.record_contradiction([p.key for p in premises], message)


def _domain_violations(g: ProofHypergraph, pool, table: SymbolTable) -> bool:
    """Record bindings that put a quantity outside its domain."""
    found = False
    for _, eq in pool:
        bound = eq.binding()
        if bound is None or bound[1].free_symbols:
            continue
        symbol, value = bound
        try:
            number = float(value)
        except TypeError:
            continue
        var = table.var(symbol)
        if not var.is_user and not var.admits(number):
            _contradiction(g, [eq], f"{eq} puts {symbol} outside {var.domain.value}")
            found = True
    return found


def _nonlinear_symbols(pool) -> Set[sympy.Symbol]:
    out: Set[sympy.Symbol] = set()
    for _, eq in pool:
        coeffs, _ = eq.linear_parts()
        for atom in coeffs:
            if not isinstance(atom, sympy.Symbol):
                out |= atom.free_symbols
    return out


def _linear_round(g, pool, table, limit, goal_symbols) -> int:
    express = _nonlinear_symbols(pool) | set(goal_symbols)
    try:
        derived = solve_linear_system([eq for _, eq in pool], express=express, table=table, limit=limit)
    except NotApplicable:
        return 0
    except Inconsistent as e:
        _contradiction(g, e.premises, str(e))
        return 0
    except AlgebraError as e:
        logger.debug("linear round stopped: %s", e)
        return 0
    added = 0
    for eq, premises in derived:
        label = SOLVE_UNIVARIATE if len(premises) == 1 and not premises[0].is_linear else SOLVE_LINEAR
        added += _add(g, pool, premises, label, eq)
    return added


def _is_source(eq: Equation, table: SymbolTable) -> bool:
    """v = constant, or v = linear expression of user variables."""
    iso = eq.isolated()
    if iso is None:
        return False
    value = iso[1]
    if not all(table.is_user(s) for s in value.free_symbols):
        return False
    coeffs, _ = linear_parts(value)
    return all(isinstance(atom, sympy.Symbol) for atom in coeffs)


def _substitution_round(g, pool, table) -> int:
    sources = [eq for _, eq in pool if _is_source(eq, table)]
    added = 0
    for _, target in pool:
        if target.is_linear:
            continue
        candidates = [s for s in sources if s.key != target.key and s.symbols & target.symbols]
        try:
            result, used = substitute_many(target, candidates)
        except NotApplicable:
            continue
        if result.is_tautology:
            continue
        premises = [target] + used
        if result.is_contradiction:
            _contradiction(g, premises, f"{result} cannot hold")
            continue
        iso = target.isolated()
        label = SUBSTITUTION
        if iso is not None and any((u.isolated() or (None,))[0] == iso[0] for u in used):
            label = TRANSITIVITY
        added += _add(g, pool, premises, label, result)
    return added


def _univariate_round(g, pool, table, state: AlgebraState, bound: Dict[sympy.Symbol, Equation], **roots_opts) -> int:
    added = 0
    for _, eq in pool:
        if len(eq.symbols) != 1 or eq.is_linear or state.has_choice(eq.key):
            continue
        var = next(iter(eq.symbols))
        if var in bound:
            continue
        try:
            roots = solve_univariate(eq, var, table, **roots_opts)
        except NotApplicable:
            continue
        except (NoRealSolution, DomainEmpty) as e:
            _contradiction(g, [eq], str(e))
            continue
        if len(roots) == 1:
            added += _add(g, pool, [eq], SOLVE_UNIVARIATE, roots[0])
            continue
        # nonnegative roots first, then ascending
        roots.sort(key=lambda r: (float(r.rhs) < 0, float(r.rhs)))
        edges, values = [], []
        for root in roots:
            result = g.add_step([eq], SOLVE_UNIVARIATE, [root])
            if isinstance(result, Rejected):
                logger.debug("root %s rejected: %s", root, result.reason)
                continue
            edges.append(result)
            values.append(root.rhs)
        added += len(edges)
        if len(edges) > 1:
            state.choices.append(RootChoice(eq.key, var.name, edges, values))
            logger.info("%s has %d roots; following %s first", var, len(edges), values[0])
    return added


def _fold_round(g, pool) -> int:
    added = 0
    for _, eq in pool:
        bound = eq.binding()
        if bound is None or bound[1].free_symbols or not eq.residual.has(*DEGREE_FUNCTIONS.values()):
            continue
        try:
            folded = evaluate_constants(eq)
        except NotApplicable:
            continue
        added += _add(g, pool, [eq], CONSTANT_EVALUATION, folded)
    return added


def _on_branch(g: ProofHypergraph, visible: Set[str]) -> bool:
    return any(set(c.premises) <= visible for c in g.contradictions)


def algebraic_pass(g: ProofHypergraph, table: Optional[SymbolTable] = None, state: Optional[AlgebraState] = None,
                   *, goal_symbols: Sequence[sympy.Symbol] = (), premise_limit: int = 24,
                   cells: int = 1024, xtol: float = 1e-12, abs_tol: float = 1e-9) -> int:
    """
    Apply the atomic operations until no new equation emerges.

    Args:
        g: Proof hypergraph, extended in place
        table: Symbol table
        state: Root choices carried between passes; only the followed branch
            of each choice is expanded
        goal_symbols: Symbols of the goal; the linear solver also expresses
            them through user variables
        premise_limit: Relevant equations up to which premise sets are exactly minimal
        cells, xtol, abs_tol: Numeric root search settings of solve_univariate

    Returns:
        Number of hyperedges added. Contradictions are recorded on g.
    """
    table = table or DEFAULT_TABLE
    state = state if state is not None else AlgebraState()
    total = 0
    for _ in range(MAX_ROUNDS):
        visible = state.visible(g)
        pool = _pool(g, visible)
        if not pool or _domain_violations(g, pool, table) or _on_branch(g, visible):
            break
        added = _linear_round(g, pool, table, premise_limit, goal_symbols)
        added += _substitution_round(g, pool, table)
        added += _univariate_round(g, pool, table, state, _bindings(pool),
                                   cells=cells, xtol=xtol, abs_tol=abs_tol)
        added += _fold_round(g, pool)
        total += added
        if not added or _on_branch(g, state.visible(g)):
            break
    logger.info("algebraic pass added %d step(s)", total)
    return total
