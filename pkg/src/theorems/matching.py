"""
Pattern matching of rule premises against graph facts.
Path: src/theorems/matching.py

Facts are matched in every arrangement their predicate symmetry allows
(segment endpoints, angle reversal, triangle permutations, polygon
rotations/reflections, joint relabeling of Similar/Congruent figures).
"""
import logging
import re
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterable, List, Optional, Tuple

import sympy

from src.algebra import Equation
from src.formal_lang import Expr, Literal, Point, lookup, print_literal
from src.formal_lang.catalog import CORRESPONDENCE, CYCLE, SEGMENT, UNORDERED, VERTEX
from src.formal_lang.literal import vertex_relabelings

from .rule import Instantiation, Match, TheoremRule, pattern_points

logger = logging.getLogger(__name__)

_VARIABLE = re.compile(r"^[a-z][a-z0-9_]*$")


def _orders(symmetry: str, n: int) -> List[Tuple[int, ...]]:
    base = tuple(range(n))
    if symmetry in (SEGMENT, UNORDERED):
        return list(permutations(base))
    if symmetry == VERTEX and n == 3:
        return [base, base[::-1]]
    if symmetry == CYCLE and n >= 3:
        out = []
        for seq in (list(base), list(base[::-1])):
            for shift in range(n):
                out.append(tuple(seq[shift:] + seq[:shift]))
        return out
    return [base]


@lru_cache(maxsize=65536)
def variants(arg) -> Tuple:
    """Every argument tree equal to arg under predicate symmetries."""
    if not isinstance(arg, Literal):
        return (arg,)
    spec = lookup(arg.predicate)
    symmetry = spec.symmetry_for(len(arg.args)) if spec else None
    n = len(arg.args)
    out = []
    if symmetry == CORRESPONDENCE and n == 2 and all(isinstance(a, Literal) for a in arg.args) \
            and len(arg.args[0].args) == len(arg.args[1].args):
        first, second = arg.args
        for perm in vertex_relabelings(first.predicate, len(first.args)):
            a = Literal(first.predicate, tuple(first.args[i] for i in perm))
            b = Literal(second.predicate, tuple(second.args[i] for i in perm))
            out.append(Literal(arg.predicate, (a, b)))
            out.append(Literal(arg.predicate, (b, a)))
    else:
        for combo in product(*(variants(a) for a in arg.args)):
            for order in _orders(symmetry, n):
                out.append(Literal(arg.predicate, tuple(combo[i] for i in order)))
    return tuple(dict.fromkeys(out))


def is_variable(expr: Expr) -> bool:
    return bool(_VARIABLE.match(expr.text))


def same_number(a: str, b: str) -> bool:
    if a == b:
        return True
    try:
        return sympy.simplify(sympy.sympify(a) - sympy.sympify(b)) == 0
    except (sympy.SympifyError, TypeError, SyntaxError):
        return False


def unify(pattern, concrete, binding: Dict[str, object]) -> Optional[Dict[str, object]]:
    """Extend binding so pattern equals concrete, or None."""
    if isinstance(pattern, Point):
        if not isinstance(concrete, Point):
            return None
        bound = binding.get(pattern.name)
        if bound is None:
            extended = dict(binding)
            extended[pattern.name] = concrete.name
            return extended
        return binding if bound == concrete.name else None
    if isinstance(pattern, Expr):
        if is_variable(pattern):
            bound = binding.get(pattern.text)
            if bound is None:
                extended = dict(binding)
                extended[pattern.text] = concrete
                return extended
            return binding if bound == concrete else None
        if isinstance(concrete, Expr) and same_number(pattern.text, concrete.text):
            return binding
        return None
    if not isinstance(concrete, Literal) or concrete.predicate != pattern.predicate \
            or len(concrete.args) != len(pattern.args):
        return None
    for p, c in zip(pattern.args, concrete.args):
        binding = unify(p, c, binding)
        if binding is None:
            return None
    return binding


def _distinct_ok(rule: TheoremRule, binding: Dict[str, object]) -> bool:
    for group in rule.distinct_groups():
        values = [binding[v] for v in group if v in binding]
        if len(values) != len(set(values)):
            return False
    return True


def join(rule: TheoremRule, ctx) -> List[Match]:
    """Every binding of the rule's premise patterns over the context's facts."""
    partial: List[Tuple[Dict[str, object], Tuple[str, ...]]] = [({}, ())]
    for pattern in rule.patterns:
        names = pattern_points(pattern)
        extended = []
        for binding, premises in partial:
            bound = {binding[n] for n in names if n in binding}
            for fact in ctx.facts(pattern.predicate):
                if fact.key in premises or not bound <= fact.points:
                    continue
                for form in variants(fact.literal):
                    result = unify(pattern, form, binding)
                    if result is not None:
                        extended.append((result, premises + (fact.key,)))
        partial = extended
        if not partial:
            return []
    seen = set()
    matches = []
    for binding, premises in partial:
        if not _distinct_ok(rule, binding):
            continue
        signature = (tuple(sorted((k, repr(v)) for k, v in binding.items())), tuple(sorted(premises)))
        if signature in seen:
            continue
        seen.add(signature)
        matches.append(Match(binding, premises))
    return matches


def _conclusion_key(c) -> str:
    return c.key if isinstance(c, Equation) else print_literal(c)


def match(rule: TheoremRule, ctx) -> List[Instantiation]:
    """
    Instantiate a rule in the context.

    Returns:
        Deduplicated instantiations sorted by (premises, conclusions);
        tautological conclusions and conclusions equal to a premise dropped
    """
    found: Dict[Tuple, Instantiation] = {}
    matches = join(rule, ctx) if rule.patterns else [Match()]
    for m in matches:
        for extra, conclusions in rule.conclude(ctx, m) or ():
            if extra is None:
                continue
            premises = tuple(sorted(set(m.premises) | set(extra)))
            if not premises:
                continue
            kept = {}
            for c in conclusions:
                if isinstance(c, Equation) and (c.is_tautology or c.is_contradiction):
                    continue
                key = _conclusion_key(c)
                if key not in premises:
                    kept.setdefault(key, c)
            if not kept:
                continue
            signature = (premises, tuple(sorted(kept)))
            if signature not in found:
                found[signature] = Instantiation(rule.name, premises, tuple(kept[k] for k in sorted(kept)))
    result = [found[k] for k in sorted(found)]
    if result:
        logger.debug("%s: %d instantiation(s)", rule.name, len(result))
    return result


def instantiate_all(rules: Iterable[TheoremRule], ctx) -> List[Instantiation]:
    out: List[Instantiation] = []
    for rule in rules:
        out.extend(match(rule, ctx))
    return out
