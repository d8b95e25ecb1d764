"""
Validation entry points and the refinement feedback text.
Path: src/validation/report.py
"""
import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from src.formal_lang import Formalization, Literal, print_literal

from .arguments import argument_problems
from .completion import Completion, complete_relations
from .consistency import Conflict, check_consistency
from .sketch import GeometrySketch

logger = logging.getLogger(__name__)

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validating one formalization"""
    contradictions: Tuple[Conflict, ...] = ()
    completions: Tuple[Completion, ...] = field(default=())

    @property
    def status(self) -> str:
        return INCONSISTENT if self.contradictions else CONSISTENT

    @property
    def consistent(self) -> bool:
        return not self.contradictions

    def added_literals(self) -> List[Literal]:
        return [c.literal for c in self.completions]


def build_sketch(f: Formalization) -> Tuple[GeometrySketch, ValidationReport]:
    """
    Build the sketch of a formalization, complete it and check it.

    Literals with a wrong argument kind in a point or figure slot are
    reported as conflicts and left out of the sketch.

    Args:
        f: Parsed formalization

    Returns:
        (sketch including completed relations, report)
    """
    ill_typed: List[Conflict] = []
    facts: List[Literal] = []
    for lit in f.facts:
        problems = argument_problems(lit)
        ill_typed.extend(Conflict((lit,), p) for p in problems)
        if not problems:
            facts.append(lit)
    if isinstance(f.goal, Literal):
        goal = Literal("Find", (f.goal,))
        ill_typed.extend(Conflict((goal,), p) for p in argument_problems(goal))

    base = GeometrySketch(facts)
    completions = complete_relations(base)
    sketch = GeometrySketch(facts, [c.literal for c in completions]) if completions else base
    report = ValidationReport(tuple(ill_typed) + tuple(check_consistency(sketch)), tuple(completions))
    logger.debug("validated %s: %s, %d completion(s)", f.name or "formalization", report.status,
                 len(report.completions))
    return sketch, report


def _error_line(conflict: Conflict) -> str:
    first, rest = conflict.literals[0], conflict.literals[1:]
    if rest:
        others = ", ".join(print_literal(l) for l in rest)
        return f"ERROR: {print_literal(first)} conflicts with {others}: {conflict.message}"
    return f"ERROR: {print_literal(first)}: {conflict.message}"


def format_feedback(report: ValidationReport) -> str:
    """Line-oriented feedback: sorted ERROR lines, then sorted ADDED lines, or OK."""
    errors = sorted(_error_line(c) for c in report.contradictions)
    added = sorted(f"ADDED: {print_literal(c.literal)} ({c.rule})" for c in report.completions)
    lines = errors + added
    return "\n".join(lines) if lines else "OK"
