"""
Formal language errors.
Path: src/formal_lang/errors.py
"""
from typing import Iterable, Optional


class FormalLanguageError(ValueError):
    """Base class for every parse/problem error of the formal language"""

    # 1-based line of the problem file, set by parse_problem
    line: Optional[int] = None

    def __str__(self) -> str:
        base = super().__str__()
        return f"line {self.line}: {base}" if self.line is not None else base


class LiteralSyntaxError(FormalLanguageError):
    """Input does not match the grammar"""

    def __init__(self, text: str, position: int, expected: Iterable[str] = ()):
        self.text = text
        self.position = position
        self.expected = sorted(set(expected))
        hint = f", expected one of {', '.join(self.expected)}" if self.expected else ""
        super().__init__(f"syntax error at position {position}{hint}")


class UnknownPredicate(FormalLanguageError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown predicate '{name}'")


class ArityMismatch(FormalLanguageError):
    def __init__(self, name: str, got: int, allowed: str):
        self.name = name
        self.got = got
        super().__init__(f"{name} takes {allowed} argument(s), got {got}")


class MissingGoal(FormalLanguageError):
    def __init__(self):
        super().__init__("problem has no Find(...) goal")


class MultipleGoals(FormalLanguageError):
    def __init__(self, count: int):
        self.count = count
        super().__init__(f"problem has {count} Find(...) goals, expected exactly one")


class InvalidFact(FormalLanguageError):
    """A parsed line that cannot stand as a problem fact (bare identifier or expression)"""

    def __init__(self, text: str):
        super().__init__(f"'{text}' is not a predicate application")
