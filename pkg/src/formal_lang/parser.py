"""
Parse formal-language text into canonical literals.
Path: src/formal_lang/parser.py
"""
import re
from typing import List

from lark import Token, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from .catalog import lookup
from .errors import ArityMismatch, FormalLanguageError, LiteralSyntaxError, UnknownPredicate
from .grammar import PARSER
from .literal import Arg, Expr, Literal, Point, canonicalize, print_literal

_WS = re.compile(r"\s+")


class _LiteralBuilder(Transformer):
    """Build Literal/Point/Expr arguments from the parse tree."""

    def __init__(self, source: str, allow_internal: bool):
        super().__init__()
        self.source = source
        self.allow_internal = allow_internal

    def args(self, children) -> List[Arg]:
        return list(children)

    def application(self, children) -> Literal:
        name_token, args = children
        name = str(name_token)
        spec = lookup(name)
        if spec is None or (spec.internal and not self.allow_internal):
            raise UnknownPredicate(name)
        if not spec.accepts(len(args)):
            raise ArityMismatch(name, len(args), spec.arity_text())
        return Literal(name, tuple(args))

    def identifier(self, children) -> Point:
        return Point(str(children[0]))

    @v_args(meta=True)
    def expression(self, meta, children) -> Expr:
        if getattr(meta, "empty", False):
            return Expr(_WS.sub("", str(children[0])))
        text = self.source[meta.start_pos:meta.end_pos]
        return Expr(_WS.sub("", text))


def parse_logic_form(text: str, *, allow_internal: bool = False) -> Arg:
    """
    Parse one logic form (application, bare identifier or expression).

    Args:
        text: Source text of a single logic form
        allow_internal: Accept engine-internal predicates (Collinear, SimRatio)

    Returns:
        Canonicalized argument tree
    """
    if not text or not text.strip():
        raise LiteralSyntaxError(text or "", 0, ["ID", "NUMBER", "VAR"])
    try:
        tree = PARSER.parse(text, start="logic_form")
    except UnexpectedInput as e:
        pos = getattr(e, "pos_in_stream", None)
        token = getattr(e, "token", None)
        if isinstance(token, Token) and token.type == "$END":
            pos = len(text)
        if pos is None:
            pos = len(text)
        expected = getattr(e, "expected", None) or getattr(e, "allowed", None) or []
        raise LiteralSyntaxError(text, pos, expected) from None
    try:
        result = _LiteralBuilder(text, allow_internal).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, FormalLanguageError):
            raise e.orig_exc from None
        raise
    return canonicalize(result)


def parse_literal(text: str, *, allow_internal: bool = False) -> Arg:
    """Parse a single logic form; predicate applications come back as canonical Literals."""
    return parse_logic_form(text, allow_internal=allow_internal)


def roundtrip(text: str) -> str:
    """Canonical printed form of a logic form."""
    return print_literal(parse_logic_form(text, allow_internal=True))
