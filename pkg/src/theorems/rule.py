"""
Theorem rules: named premise patterns with a conclusion hook.
Path: src/theorems/rule.py

A rule is written as a function decorated with @theorem(...). Its premise
patterns are literals whose points (and lowercase expressions) are
variables; the function receives each joined match and yields
(extra premise keys, conclusions) pairs.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

from src.algebra import Equation
from src.formal_lang import Literal, Point, parse_logic_form

Conclusion = Union[Literal, Equation]


@dataclass(frozen=True)
class Match:
    """Variable binding of one joined premise match"""
    binding: Dict[str, object] = field(default_factory=dict)
    premises: Tuple[str, ...] = ()

    def __getitem__(self, name: str):
        return self.binding[name]

    def points(self, names: str) -> Tuple[str, ...]:
        """m.points("ABC") -> bound names of the point variables A, B, C."""
        return tuple(self.binding[n] for n in names)


@dataclass(frozen=True)
class Instantiation:
    """One ready-to-add step: premise node keys and conclusion payloads"""
    rule: str
    premises: Tuple[str, ...]
    conclusions: Tuple[Conclusion, ...]


@dataclass(frozen=True)
class TheoremRule:
    """
    A named theorem.

    Args:
        name: Step label shown in solutions
        statement: One-sentence statement for listings
        conclude: fn(ctx, match) -> iterable of (extra premise keys, conclusions)
        patterns: Premise patterns joined over the graph's facts (may be empty)
        distinct: Groups of point variables that must bind to different points;
            None means all point variables of the patterns are distinct
    """
    name: str
    statement: str
    conclude: Callable
    patterns: Tuple[Literal, ...] = ()
    distinct: Optional[Tuple[str, ...]] = None

    @property
    def variables(self) -> List[str]:
        names: List[str] = []
        for p in self.patterns:
            for n in pattern_points(p):
                if n not in names:
                    names.append(n)
        return names

    def distinct_groups(self) -> Tuple[str, ...]:
        if self.distinct is not None:
            return self.distinct
        return ("".join(self.variables),)


def pattern_points(pattern) -> List[str]:
    """Point variables of a pattern in first-occurrence order."""
    out: List[str] = []
    if isinstance(pattern, Point):
        out.append(pattern.name)
    elif isinstance(pattern, Literal):
        for a in pattern.args:
            for n in pattern_points(a):
                if n not in out:
                    out.append(n)
    return out


def parse_pattern(text: str) -> Literal:
    return parse_logic_form(text, allow_internal=True)


def theorem(catalog: List[TheoremRule], name: str, statement: str, *patterns: str,
            distinct: Optional[Iterable[str]] = None):
    """Register the decorated conclusion hook as a rule in catalog."""
    def register(fn: Callable) -> Callable:
        catalog.append(TheoremRule(
            name=name,
            statement=statement,
            conclude=fn,
            patterns=tuple(parse_pattern(p) for p in patterns),
            distinct=tuple(distinct) if distinct is not None else None,
        ))
        return fn
    return register
