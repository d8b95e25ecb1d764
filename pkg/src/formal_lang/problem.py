"""
Problem files: one literal per line plus exactly one Find goal.
Path: src/formal_lang/problem.py
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, List, Tuple, Union

from .errors import FormalLanguageError, InvalidFact, MissingGoal, MultipleGoals
from .literal import Arg, Literal, print_literal
from .parser import parse_logic_form


@dataclass(frozen=True)
class Formalization:
    """Facts L plus the target term t of the single Find(t)"""
    facts: Tuple[Literal, ...]
    goal: Arg
    name: str = field(default="", compare=False)

    @property
    def goal_literal(self) -> Literal:
        return Literal("Find", (self.goal,))

    def literals(self) -> List[Literal]:
        return list(self.facts) + [self.goal_literal]

    def to_text(self) -> str:
        """Serialize in the one-literal-per-line interchange format."""
        return "\n".join(print_literal(l) for l in self.literals()) + "\n"

    @classmethod
    def from_literals(cls, literals: Iterable[Literal], name: str = "") -> "Formalization":
        facts, goals = [], []
        for lit in literals:
            (goals if lit.predicate == "Find" else facts).append(lit)
        if not goals:
            raise MissingGoal()
        if len(goals) > 1:
            raise MultipleGoals(len(goals))
        return cls(tuple(_dedupe(facts)), goals[0].args[0], name)


def _dedupe(literals: Iterable[Literal]) -> List[Literal]:
    seen, out = set(), []
    for lit in literals:
        if lit not in seen:
            seen.add(lit)
            out.append(lit)
    return out


def parse_problem(text: str, name: str = "") -> Formalization:
    """
    Parse a multi-line formalization.

    Blank lines and lines starting with '#' are skipped. Parse errors carry
    the 1-based line number they occurred on.
    """
    facts: List[Literal] = []
    goals: List[Tuple[int, Literal]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            parsed = parse_logic_form(stripped)
            if not isinstance(parsed, Literal):
                raise InvalidFact(stripped)
        except FormalLanguageError as e:
            e.line = lineno
            raise
        if parsed.predicate == "Find":
            goals.append((lineno, parsed))
        else:
            facts.append(parsed)

    if not goals:
        raise MissingGoal()
    if len(goals) > 1:
        err = MultipleGoals(len(goals))
        err.line = goals[1][0]
        raise err
    return Formalization(tuple(_dedupe(facts)), goals[0][1].args[0], name)


def load_problem(path: Union[str, Path]) -> Formalization:
    path = Path(path)
    return parse_problem(path.read_text(encoding="utf-8"), name=path.parent.name if path.name == "problem.txt" else path.stem)
