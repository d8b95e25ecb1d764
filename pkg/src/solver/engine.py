"""
Solve loop: validate, build the graph, alternate deductive and algebraic
expansion until the goal has a numeric value, then extract the minimal
stepwise solution.
Path: src/solver/engine.py
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import sympy

from src.algebra import (
    CONSTANT_EVALUATION, SUBSTITUTION, ConversionError, Equation, SymbolTable, literal_to_equation, to_sympy,
)
from src.algebra.equation import set_tolerance
from src.formal_lang import Expr, Formalization, Literal
from src.hypergraph.graph import Contradiction, EmptyFacts, ProofHypergraph, Rejected
from src.hypergraph.minimal import SubHypergraph, find_minimal_subgraph, topological_order
from src.theorems.registry import TheoremRegistry, deductive_pass
from src.validation.report import ValidationReport, build_sketch, format_feedback

from .algebra_pass import AlgebraState, algebraic_pass
from .config import SolverConfig

logger = logging.getLogger(__name__)

SOLVED = "solved"
UNSOLVABLE = "unsolvable"
INCONSISTENT = "inconsistent"

# Unsolvable reasons
SATURATED = "saturated"
MAX_ITERATIONS = "max_iterations"
TIMEOUT = "timeout"
NUMERIC_CONTRADICTION = "numeric_contradiction"


@dataclass(frozen=True)
class Step:
    """One syllogistic step by node keys"""
    theorem: str
    premises: Tuple[str, ...]
    conclusions: Tuple[str, ...]


@dataclass
class SolveStats:
    iterations: int = 0
    nodes: int = 0
    edges: int = 0
    edges_in_minimal: int = 0
    wall_time: float = 0.0

    def to_dict(self) -> Dict[str, float]:
        return {
            "iterations": self.iterations,
            "nodes": self.nodes,
            "edges": self.edges,
            "edges_in_minimal": self.edges_in_minimal,
            "wall_time": round(self.wall_time, 3),
        }


@dataclass
class Solution:
    """
    A solved problem.

    Args:
        answer: Equals(goal, value)
        goal: Goal term as a sympy expression
        value: Numeric value of the goal
        steps: Minimal steps in topological order, Known Facts first
        stats: Solve statistics
        graph: Full proof hypergraph (node payloads for rendering)
        subgraph: Minimal supporting sub-hypergraph
        alternatives: Roots not followed, per variable that had several
    """
    answer: Literal
    goal: sympy.Expr
    value: sympy.Expr
    steps: List[Step]
    stats: SolveStats
    graph: ProofHypergraph = field(repr=False)
    subgraph: Optional[SubHypergraph] = field(default=None, repr=False)
    alternatives: Dict[str, List[sympy.Expr]] = field(default_factory=dict)

    status = SOLVED


@dataclass
class Unsolvable:
    reason: str
    detail: str = ""
    stats: SolveStats = field(default_factory=SolveStats)
    graph: Optional[ProofHypergraph] = field(default=None, repr=False)

    status = UNSOLVABLE


@dataclass
class InconsistentResult:
    """The formalization failed validation; feedback drives refinement"""
    report: ValidationReport

    status = INCONSISTENT

    @property
    def feedback(self) -> str:
        return format_feedback(self.report)


SolveResult = Union[Solution, Unsolvable, InconsistentResult]


def known_facts(facts: Sequence[Literal], table: SymbolTable) -> List[object]:
    """Graph payloads of facts: numeric equalities become equations, the rest stay literals."""
    out: List[object] = []
    for lit in facts:
        if lit.predicate == "Equals":
            try:
                eq = literal_to_equation(lit, table)
            except ConversionError:
                out.append(lit)
                continue
            if not eq.is_tautology:
                out.append(eq)
            continue
        out.append(lit)
    return out


def value_text(value: sympy.Expr) -> str:
    """Value in the expression syntax of the formal language."""
    if isinstance(value, sympy.Float):
        return f"{float(value):.10g}"
    return sympy.sstr(value).replace("**", "^")


def _bindings(g: ProofHypergraph, visible: Set[str]) -> Dict[sympy.Symbol, Equation]:
    out: Dict[sympy.Symbol, Equation] = {}
    for _, eq in sorted((k, v) for k, v in g.equations() if k in visible):
        bound = eq.binding()
        if bound is None or bound[1].free_symbols:
            continue
        known = out.get(bound[0])
        if known is None or (known.approximate and not eq.approximate):
            out[bound[0]] = eq
    return out


def _goal_node(g: ProofHypergraph, goal: sympy.Expr, visible: Set[str]) -> Optional[Tuple[str, sympy.Expr]]:
    """(node key, value) once the goal folds to a number on the followed branch."""
    bindings = _bindings(g, visible)
    if isinstance(goal, sympy.Symbol):
        eq = bindings.get(goal)
        return (eq.key, eq.binding()[1]) if eq is not None else None
    if not all(s in bindings for s in goal.free_symbols):
        return None
    used = [bindings[s] for s in sorted(goal.free_symbols, key=lambda s: s.name)]
    value = sympy.simplify(goal.subs({s: bindings[s].binding()[1] for s in goal.free_symbols}))
    if value.free_symbols:
        return None
    conclusion = Equation(goal, value)
    if conclusion.key not in visible:
        # a constant goal rests on the given facts
        premises = [u.key for u in used] or list(g.edges[g.known_facts_edge].conclusions)
        label = SUBSTITUTION if used else CONSTANT_EVALUATION
        result = g.add_step(premises, label, [conclusion])
        if isinstance(result, Rejected):
            logger.debug("goal step rejected: %s", result.reason)
            return None
    return conclusion.key, value


def _stats(g: ProofHypergraph, iterations: int, started: float, minimal: int = 0) -> SolveStats:
    return SolveStats(iterations, len(g.nodes), len(g.edges), minimal, time.monotonic() - started)


def _contradiction_detail(g: ProofHypergraph, c: Contradiction) -> str:
    premises = ", ".join(g.text(p) for p in c.premises)
    return f"{c.message} (from {premises})" if premises else c.message


def _solution(g: ProofHypergraph, f: Formalization, goal: sympy.Expr, key: str, value: sympy.Expr,
              cfg: SolverConfig, iterations: int, started: float, state: AlgebraState) -> Solution:
    sub = find_minimal_subgraph(g, key, beam_cap=cfg.beam_cap, exact_limit=cfg.exact_subgraph_limit,
                                exclude=state.excluded_edges())
    steps = [Step(g.edges[e].theorem, g.edges[e].premises, sub.conclusions[e]) for e in topological_order(sub)]
    answer = Literal("Equals", (f.goal, Expr(value_text(value))))
    stats = _stats(g, iterations, started, len(sub.edges))
    logger.info("solved %s: %s in %d step(s) of %d", f.name or "problem", value_text(value), len(steps),
                stats.edges)
    return Solution(answer, goal, value, steps, stats, g, sub, state.alternatives(g))


def solve(f: Formalization, cfg: Optional[SolverConfig] = None, *,
          registry: Optional[TheoremRegistry] = None) -> SolveResult:
    """
    Solve one formalization.

    Args:
        f: Parsed formalization
        cfg: Budgets and switches
        registry: Theorem rules (default catalog when None)

    Returns:
        Solution, Unsolvable(reason) or InconsistentResult(report)
    """
    cfg = cfg or SolverConfig()
    started = time.monotonic()
    set_tolerance(cfg.rel_tol, cfg.abs_tol)
    table = SymbolTable()

    sketch, report = build_sketch(f)
    if not report.consistent:
        logger.info("%s failed validation with %d contradiction(s)", f.name or "problem",
                    len(report.contradictions))
        return InconsistentResult(report)

    try:
        goal = to_sympy(f.goal, table)
    except ConversionError as e:
        return Unsolvable(SATURATED, f"goal has no numeric value: {e}")

    try:
        g = ProofHypergraph(known_facts(list(f.facts) + report.added_literals(), table))
    except EmptyFacts as e:
        return Unsolvable(SATURATED, str(e))
    for key, eq in g.equations():
        if eq.is_contradiction:
            g.record_contradiction([key], f"{eq} cannot hold")
    if g.contradictions:
        return Unsolvable(NUMERIC_CONTRADICTION, _contradiction_detail(g, g.contradictions[0]),
                          _stats(g, 0, started), g)

    state = AlgebraState()
    goal_symbols = sorted(goal.free_symbols, key=lambda s: s.name)
    for iteration in range(cfg.max_iterations + 1):
        found = _goal_node(g, goal, state.visible(g))
        if found is not None:
            return _solution(g, f, goal, found[0], found[1], cfg, iteration, started, state)
        if iteration == cfg.max_iterations:
            break
        if time.monotonic() - started > cfg.timeout:
            return Unsolvable(TIMEOUT, f"no answer after {cfg.timeout:g}s", _stats(g, iteration, started), g)

        added, switches = 0, state.switches
        if cfg.deductive:
            added += deductive_pass(g, sketch, registry, table=table, goal=f.goal, skip=state.hidden(g))
        if cfg.algebraic:
            added += algebraic_pass(g, table, state, goal_symbols=goal_symbols, premise_limit=cfg.premise_limit,
                                    cells=cfg.root_grid_cells, xtol=cfg.root_xtol, abs_tol=cfg.abs_tol)
        if not state.prune(g):
            return Unsolvable(NUMERIC_CONTRADICTION, _contradiction_detail(g, state.unexplained[0]),
                              _stats(g, iteration + 1, started), g)
        if not added and state.switches == switches:
            found = _goal_node(g, goal, state.visible(g))
            if found is not None:
                return _solution(g, f, goal, found[0], found[1], cfg, iteration + 1, started, state)
            return Unsolvable(SATURATED, "no rule or operation adds anything new",
                              _stats(g, iteration + 1, started), g)
    return Unsolvable(MAX_ITERATIONS, f"no answer after {cfg.max_iterations} iteration(s)",
                      _stats(g, cfg.max_iterations, started), g)
