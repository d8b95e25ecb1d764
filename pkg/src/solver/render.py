"""
Stepwise solution text, result JSON and the syllogistic checker.
Path: src/solver/render.py
"""
from typing import Any, Dict, List, Optional, Set

from src.algebra import format_equation, format_expr
from src.algebra.printing import format_number
from src.formal_lang import Literal, print_literal, render_literal
from src.hypergraph.graph import START, ProofHypergraph

from .engine import InconsistentResult, Solution, SolveResult, Unsolvable, value_text


def node_text(g: ProofHypergraph, key: str, ascii: bool = False) -> str:
    """Display notation of one node."""
    if key == START:
        return START
    payload = g.nodes[key]
    if isinstance(payload, Literal):
        return render_literal(payload, ascii)
    return format_equation(payload, ascii)


def render_solution(sol: Solution, ascii: bool = False) -> str:
    """
    Human-readable solution.

    Args:
        sol: Solved problem
        ascii: Plain ASCII notation instead of math symbols

    Returns:
        One "Step k: <Theorem>: <premises> ⟹ <conclusions>" line per step
        followed by the answer line
    """
    arrow = " => " if ascii else " ⟹ "
    lines = []
    for k, step in enumerate(sol.steps, 1):
        premises = ", ".join(node_text(sol.graph, p, ascii) for p in step.premises)
        conclusions = ", ".join(node_text(sol.graph, c, ascii) for c in step.conclusions)
        lines.append(f"Step {k}: {step.theorem}: {premises}{arrow}{conclusions}")
    lines.append(f"Answer: {format_expr(sol.goal, ascii)} = {format_number(sol.value, ascii)}")
    return "\n".join(lines)


def _formal(g: ProofHypergraph, key: str) -> str:
    payload = g.nodes.get(key)
    if isinstance(payload, Literal):
        return print_literal(payload)
    return g.text(key)


def _number(value) -> Optional[float]:
    try:
        return float(value)
    except (TypeError, ValueError):
        return None


def result_to_dict(result: SolveResult) -> Dict[str, Any]:
    """Structured result with stable field names."""
    out: Dict[str, Any] = {
        "status": result.status, "answer": None, "value": None, "steps": [],
        "stats": {}, "reason": None, "detail": None,
    }
    if isinstance(result, Solution):
        g = result.graph
        out["answer"] = print_literal(result.answer)
        out["value"] = _number(result.value)
        out["steps"] = [
            {
                "theorem": s.theorem,
                "premises": [_formal(g, p) for p in s.premises],
                "conclusions": [_formal(g, c) for c in s.conclusions],
            }
            for s in result.steps
        ]
        out["stats"] = result.stats.to_dict()
        if result.alternatives:
            out["alternatives"] = {k: [value_text(v) for v in vs] for k, vs in sorted(result.alternatives.items())}
    elif isinstance(result, Unsolvable):
        out["reason"] = result.reason
        out["detail"] = result.detail
        out["stats"] = result.stats.to_dict()
    elif isinstance(result, InconsistentResult):
        out["reason"] = "validation"
        out["detail"] = result.feedback
    return out


def check_solution(sol: Solution) -> List[str]:
    """
    Walk the steps and report premises not established before use.

    Returns:
        Problems found; empty when the solution is syllogistically closed
        and its last conclusions include the goal
    """
    problems: List[str] = []
    if not sol.steps:
        return ["solution has no steps"]
    if sol.steps[0].premises != (START,):
        problems.append("step 1 does not start from the known facts")
    established: Set[str] = {START}
    for k, step in enumerate(sol.steps, 1):
        for p in step.premises:
            if p not in established:
                problems.append(f"step {k} ({step.theorem}) uses {sol.graph.text(p)} before it is established")
        established |= set(step.conclusions)
    if sol.subgraph is not None and sol.subgraph.goal not in established:
        problems.append(f"goal {sol.graph.text(sol.subgraph.goal)} is never concluded")
    return problems
