"""
Rule-based translation of problem text into formal literals.
Path: src/text_parser/parser.py
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from src.formal_lang import Literal, parse_logic_form, print_literal
from src.formal_lang.errors import FormalLanguageError

from .rules import ParseRule, default_rules

logger = logging.getLogger(__name__)

_LATEX = (
    (r"\\angle\s*", "∠"), (r"\\triangle\s*", "△"), (r"\\odot\s*", "⊙"), (r"\\parallel", "∥"),
    (r"\\perp", "⊥"), (r"\\cong", "≅"), (r"\\sim", "∼"), (r"\\sqrt\{([^}]*)\}", r"√\1"),
    (r"\\frac\{([^}]*)\}\{([^}]*)\}", r"\1/\2"), (r"\^\{?\\circ\}?", "°"), (r"\\overline\{([^}]*)\}", r"\1"),
    (r"\\widehat\{([^}]*)\}", r"⌒\1"), (r"\\cdot", "*"), (r"\\times", "*"),
)
_UNITS = re.compile(
    r"(?<=[0-9])\s*(?:(?:square|sq\.?)\s+)?"
    r"(?:degrees?|units?|cm|mm|km|m|inches|inch|ft|feet|meters?|yards?|yd)\b(?!\s*∠)"
)
_SENTENCE = re.compile(r"(?<![0-9])\.|\.(?![0-9])|[?!;\n]")
_TOKEN = re.compile(r"[A-Za-z0-9∠△⊙⌒∥⊥≅∼√]+")

FILLER = frozenset({
    "a", "an", "and", "are", "as", "at", "be", "below", "by", "figure", "for", "from", "given", "if",
    "in", "is", "it", "let", "of", "shown", "so", "suppose", "that", "the", "then", "to", "where",
    "which", "with", "also", "above", "diagram", "use", "assume", "following", "information",
})


@dataclass
class TextParseReport:
    """
    Literals emitted for a text plus what no rule covered.

    Args:
        literals: Emitted literals in text order, duplicates removed
        unmatched: Text spans no rule matched (filler words ignored)
        rejected: Emissions that did not parse as formal literals
    """
    literals: List[Literal] = field(default_factory=list)
    unmatched: List[str] = field(default_factory=list)
    rejected: List[str] = field(default_factory=list)

    @property
    def goal(self) -> Optional[Literal]:
        return next((l for l in self.literals if l.predicate == "Find"), None)

    def to_text(self) -> str:
        """One printed literal per line, goal last."""
        facts = [print_literal(l) for l in self.literals if l.predicate != "Find"]
        goals = [print_literal(l) for l in self.literals if l.predicate == "Find"]
        return "\n".join(facts + goals)


def normalize(text: str) -> str:
    """LaTeX spellings to symbols, math delimiters and unit suffixes removed."""
    for pattern, replacement in _LATEX:
        text = re.sub(pattern, replacement, text)
    text = text.replace("$", "").replace("||", "∥").replace("~", "∼").replace("≃", "≅")
    return _UNITS.sub("", text.replace("°", ""))


def split_sentences(text: str) -> List[str]:
    """
    Split on sentence punctuation, then unfold equality chains.

    x1 = x2 = x3 becomes x1 = x2 and x2 = x3.
    """
    out = []
    for sentence in _SENTENCE.split(text):
        sentence = sentence.strip()
        if not sentence:
            continue
        sides = sentence.split("=")
        if len(sides) <= 2:
            out.append(sentence)
            continue
        for left, right in zip(sides, sides[1:]):
            out.append(f"{left.strip()} = {right.strip()}")
    return out


@dataclass(frozen=True)
class _Candidate:
    start: int
    end: int
    rule: ParseRule
    match: "re.Match" = field(compare=False)

    def order(self) -> Tuple:
        return self.start, -(self.end - self.start), -self.rule.priority, self.rule.emission


def _candidates(sentence: str, rules: Iterable[ParseRule]) -> List[_Candidate]:
    found = []
    for rule in rules:
        for m in rule.regex.finditer(sentence):
            if m.end() > m.start():
                found.append(_Candidate(m.start(), m.end(), rule, m))
    return sorted(found, key=_Candidate.order)


def _select(candidates: Sequence[_Candidate]) -> List[_Candidate]:
    """Left to right, longest span first, then priority, then emission text."""
    chosen: List[_Candidate] = []
    covered_to = 0
    for c in candidates:
        if c.start >= covered_to:
            chosen.append(c)
            covered_to = c.end
    return chosen


def _gap(text: str) -> Optional[str]:
    tokens = _TOKEN.findall(text)
    if any(t.lower() not in FILLER for t in tokens):
        return text.strip(" ,:")
    return None


class TextParser:
    """
    Longest-match application of a rule table.

    Args:
        rules: Parse rules (default table when None)
    """

    def __init__(self, rules: Optional[Iterable[ParseRule]] = None):
        self.rules = tuple(rules) if rules is not None else default_rules()

    def _emit(self, candidate: _Candidate, report: TextParseReport) -> None:
        for text in candidate.rule.render(candidate.match):
            try:
                lit = parse_logic_form(text)
            except FormalLanguageError as e:
                logger.debug("emission %r rejected: %s", text, e)
                report.rejected.append(text)
                continue
            if not isinstance(lit, Literal):
                report.rejected.append(text)
                continue
            if lit not in report.literals:
                report.literals.append(lit)

    def parse(self, text: str) -> TextParseReport:
        report = TextParseReport()
        for sentence in split_sentences(normalize(text)):
            pos = 0
            for c in _select(_candidates(sentence, self.rules)):
                gap = _gap(sentence[pos:c.start])
                if gap:
                    report.unmatched.append(gap)
                self._emit(c, report)
                pos = c.end
            gap = _gap(sentence[pos:])
            if gap:
                report.unmatched.append(gap)
        if report.unmatched:
            logger.info("%d text span(s) matched no rule", len(report.unmatched))
        return report


def parse_text_report(text: str, rules: Optional[Iterable[ParseRule]] = None) -> TextParseReport:
    return TextParser(rules).parse(text)


def parse_text(text: str, rules: Optional[Iterable[ParseRule]] = None) -> List[Literal]:
    """
    Translate problem text into (pseudo) formal literals.

    Args:
        text: Natural-language problem text
        rules: Parse rules (default table when None)

    Returns:
        Literals in text order; Shape($) stands for unknown figures
    """
    return parse_text_report(text, rules).literals
