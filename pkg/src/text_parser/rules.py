"""
Rule table of the text parser.
Path: src/text_parser/rules.py

One rule per line: priority<TAB>pattern<TAB>emission. A pattern is a
case-insensitive regular expression in which spaces match any run of
whitespace and {name:type} marks a typed slot; the emission is a
';'-separated list of literal templates over the slot names.
"""
import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

from src.config import load_config, resolve_path, section

logger = logging.getLogger(__name__)

DEFAULT_RULES_PATH = "./data/text_rules.tsv"

_NOT_BEFORE = r"(?<![A-Za-z0-9∠△⊙⌒])"
_NOT_AFTER = r"(?![A-Za-z0-9])"
_LABEL = r"(?-i:[A-Z][0-9]*)"


def _label_run(n: int, m: int) -> str:
    """n to m point labels, optionally space separated."""
    return rf"{_LABEL}(?:\s?{_LABEL}){{{n - 1},{m - 1}}}"


_NUMBER = r"\d+(?:\.\d+)?"
_ROOT = rf"√\s*{_NUMBER}"
_NUM = rf"(?:{_NUMBER}\s*{_ROOT}|{_ROOT}|{_NUMBER}(?:\s*/\s*{_NUMBER})?)(?![0-9])"
_VAR = r"(?-i:[a-z](?:_?[0-9]+)?)(?![A-Za-z])"
_TERM = rf"(?:{_NUMBER}\s*{_ROOT}|{_NUMBER}(?:{_VAR})?|{_ROOT}|(?!a\b){_VAR})"

SHAPES = ("quadrilateral", "parallelogram", "rectangle", "square", "rhombus", "trapezoid", "kite",
          "pentagon", "hexagon", "heptagon", "octagon", "polygon")

SLOT_PATTERNS: Dict[str, str] = {
    "pt": _NOT_BEFORE + _LABEL + _NOT_AFTER,
    "seg": _NOT_BEFORE + _label_run(2, 2) + _NOT_AFTER,
    "angle": r"(?:m\s*)?(?:∠|angle\s+)\s*" + rf"{_LABEL}(?:\s?{_LABEL}\s?{_LABEL})?" + _NOT_AFTER,
    "arc": r"(?:m\s*)?(?:⌒|arc\s+)\s*" + _label_run(2, 3) + _NOT_AFTER,
    "tri": r"(?:△|triangle\s+)\s*" + _label_run(3, 3) + _NOT_AFTER,
    "poly": _NOT_BEFORE + _label_run(3, 8) + _NOT_AFTER,
    "shape": rf"(?:{'|'.join(SHAPES)})\s+" + _label_run(3, 8) + _NOT_AFTER,
    "circle": r"(?:⊙|circle\s+)\s*" + _LABEL + _NOT_AFTER,
    "num": r"(?<![A-Za-z0-9.])" + _NUM,
    "var": r"(?<![A-Za-z0-9])" + _VAR,
    "val": rf"(?<![A-Za-z0-9.])(?:\(\s*)?{_TERM}(?:\s*[-+*/]\s*\(?\s*{_TERM}\s*\)?)*(?![0-9])",
}

_SLOT = re.compile(r"\{([a-z][a-z0-9_]*):([a-z]+)\}")
_EMISSION_SLOT = re.compile(r"\{([a-z][a-z0-9_]*)\}")
_LABEL_TEXT = re.compile(r"[A-Z][0-9]*")


class RuleTableError(ValueError):
    """Malformed rule table row"""

    def __init__(self, source: str, line: int, message: str):
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}")


def _labels(text: str) -> List[str]:
    return _LABEL_TEXT.findall(text.replace("m∠", "∠"))


def render_number(text: str) -> str:
    """Integer, decimal, a/b, √k or a√k in formal-language syntax."""
    text = re.sub(r"\s+", "", text)
    if "√" in text:
        coeff, root = text.split("√", 1)
        sqrt = f"SqrtOf({root})"
        return f"Mul({coeff},{sqrt})" if coeff else sqrt
    return text


def render_value(text: str) -> str:
    compact = re.sub(r"\s+", "", text)
    if re.fullmatch(_NUM, compact) or re.fullmatch(_NUM, text.strip()):
        return render_number(compact)
    return re.sub(r"√(\d+(?:\.\d+)?)", r"sqrt(\1)", compact)


def _render_shape(text: str) -> str:
    word, _, rest = text.strip().partition(" ")
    return f"{word.capitalize()}({','.join(_labels(rest))})"


def _angle_labels(text: str) -> str:
    return ",".join(_labels(re.sub(r"(?i)^m\s*|angle\s+", "", text)))


RENDERERS: Dict[str, Callable[[str], str]] = {
    "pt": lambda t: _labels(t)[0],
    "seg": lambda t: "Line({},{})".format(*_labels(t)),
    "angle": lambda t: f"Angle({_angle_labels(t)})",
    "arc": lambda t: f"Arc({','.join(_labels(re.sub(r'(?i)arc', '', t)))})",
    "tri": lambda t: f"Triangle({','.join(_labels(re.sub(r'(?i)triangle', '', t)))})",
    "poly": lambda t: ",".join(_labels(t)),
    "shape": _render_shape,
    "circle": lambda t: f"Circle({_labels(re.sub(r'(?i)circle', '', t))[0]})",
    "num": render_number,
    "var": lambda t: t.strip(),
    "val": render_value,
}


@dataclass(frozen=True)
class ParseRule:
    """
    One pattern -> emission rule.

    Args:
        priority: Rank among matches of equal span (higher wins)
        pattern: Pattern text as written in the table
        emission: ';'-separated literal templates
        regex: Compiled pattern with one named group per slot
        slots: Slot name -> slot type
    """
    priority: int
    pattern: str
    emission: str
    regex: re.Pattern = field(compare=False, repr=False)
    slots: Tuple[Tuple[str, str], ...] = ()

    def render(self, m: "re.Match") -> List[str]:
        """Instantiate the emission templates for one match."""
        values = {name: RENDERERS[kind](m.group(name)) for name, kind in self.slots}
        return [t.strip().format_map(values) for t in self.emission.split(";") if t.strip()]


def compile_rule(priority: int, pattern: str, emission: str, source: str = "<rules>", line: int = 0) -> ParseRule:
    """
    Compile one table row.

    Raises:
        RuleTableError: unknown slot type, repeated slot name, emission slot
            not bound by the pattern or an invalid regular expression
    """
    parts: List[str] = []
    slots: List[Tuple[str, str]] = []
    pos = 0
    for m in _SLOT.finditer(pattern):
        parts.append(re.sub(r" +", r"\\s*", pattern[pos:m.start()]))
        name, kind = m.groups()
        if kind not in SLOT_PATTERNS:
            raise RuleTableError(source, line, f"unknown slot type {kind!r}")
        if any(name == n for n, _ in slots):
            raise RuleTableError(source, line, f"slot {name!r} used twice")
        slots.append((name, kind))
        parts.append(f"(?P<{name}>{SLOT_PATTERNS[kind]})")
        pos = m.end()
    parts.append(re.sub(r" +", r"\\s*", pattern[pos:]))

    bound = {n for n, _ in slots}
    unbound = sorted(set(_EMISSION_SLOT.findall(emission)) - bound)
    if unbound:
        raise RuleTableError(source, line, f"emission uses unbound slot(s) {', '.join(unbound)}")
    try:
        regex = re.compile("".join(parts), re.IGNORECASE)
    except re.error as e:
        raise RuleTableError(source, line, f"bad pattern: {e}") from e
    return ParseRule(priority, pattern, emission, regex, tuple(slots))


def parse_rule_table(text: str, source: str = "<rules>") -> List[ParseRule]:
    """Rules of a table text; blank lines and '#' comments are skipped."""
    rules = []
    for number, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        cells = raw.split("\t")
        if len(cells) != 3:
            raise RuleTableError(source, number, f"expected 3 tab-separated cells, got {len(cells)}")
        priority, pattern, emission = (c.strip() for c in cells)
        try:
            rank = int(priority)
        except ValueError:
            raise RuleTableError(source, number, f"priority {priority!r} is not an integer") from None
        rules.append(compile_rule(rank, pattern, emission, source, number))
    return rules


def load_rules(path: Optional[Union[str, Path]] = None) -> List[ParseRule]:
    """
    Load the rule table.

    Args:
        path: Table file; defaults to paths.text_rules of config.yaml
    """
    if path is None:
        path = section(load_config(), "paths").get("text_rules", DEFAULT_RULES_PATH)
    table = resolve_path(str(path))
    rules = parse_rule_table(table.read_text(encoding="utf-8"), str(table))
    logger.debug("loaded %d text rule(s) from %s", len(rules), table)
    return rules


@lru_cache(maxsize=1)
def default_rules() -> Tuple[ParseRule, ...]:
    return tuple(load_rules())
