"""
Snapshot of the proof graph as seen by the theorem rules.
Path: src/theorems/context.py

Literal nodes are facts as they are. Equation nodes are additionally seen
through two literal views: an alias a = b of two quantities reads as
Equals(a, b), a binding v = value reads as Equals(v, value). Views carry
the key of the equation node they come from.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import sympy

from src.algebra import ConversionError, Equation, SymbolTable, length, measure, quantity_symbol, to_sympy
from src.algebra.symbols import DEFAULT_TABLE
from src.formal_lang import Expr, Literal, Point, canonicalize, collect_points, walk
from src.formal_lang.catalog import POLYGON_PREDICATES
from src.hypergraph.graph import ProofHypergraph, node_key
from src.validation.sketch import GeometrySketch
from src.validation.staging import Staged, support

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fact:
    key: str
    literal: Literal
    points: FrozenSet[str]


def _alias(eq: Equation) -> Optional[Tuple[sympy.Symbol, sympy.Symbol]]:
    coeffs, const = eq.linear_parts()
    if const != 0 or len(coeffs) != 2:
        return None
    (a, ca), (b, cb) = coeffs.items()
    if not (isinstance(a, sympy.Symbol) and isinstance(b, sympy.Symbol)) or ca + cb != 0:
        return None
    return a, b


class RuleContext:
    """
    Read-only view of a graph for one deductive pass.

    Args:
        g: Proof hypergraph
        sketch: Sketch of the validated formalization
        table: Symbol table shared with the algebra pass
        goal: Target term of Find, if any
        skip: Node keys the rules must not build on
    """

    def __init__(self, g: ProofHypergraph, sketch: GeometrySketch, table: Optional[SymbolTable] = None,
                 goal=None, skip: Iterable[str] = ()):
        self.g = g
        self.sketch = sketch
        self.table = table or DEFAULT_TABLE
        self.goal = goal
        self.skip = frozenset(skip)
        self._facts: Dict[str, List[Fact]] = defaultdict(list)
        self.values: Dict[sympy.Symbol, Tuple[sympy.Expr, str]] = {}
        self.mentioned: Set[sympy.Symbol] = set()
        self._build()

    def _build(self) -> None:
        for key, payload in list(self.g.nodes.items()):
            if key in self.skip or payload is None:
                continue
            if isinstance(payload, Literal):
                self._add(key, payload)
                if payload.predicate == "Angle" and len(payload.args) == 3:
                    self.mentioned.add(self.A(*payload.point_names()))
                continue
            self.mentioned |= payload.symbols
            self._views(key, payload)
        if self.goal is not None:
            try:
                self.mentioned |= to_sympy(self.goal, self.table).free_symbols
            except ConversionError:
                logger.debug("goal has no numeric form")

    def _add(self, key: str, lit: Literal) -> None:
        self._facts[lit.predicate].append(Fact(key, lit, frozenset(collect_points(lit))))

    def _views(self, key: str, eq: Equation) -> None:
        alias = _alias(eq)
        if alias is not None:
            a, b = (self.table.origin(s) for s in alias)
            if a is not None and b is not None:
                self._add(key, Literal("Equals", (a, b)))
            return
        bound = eq.binding()
        if bound is None or eq.approximate:
            return
        symbol, value = bound
        if value.free_symbols:
            return
        known = self.values.get(symbol)
        if known is None or len(key) < len(known[1]):
            self.values[symbol] = (value, key)
        origin = self.table.origin(symbol)
        if origin is not None:
            self._add(key, Literal("Equals", (origin, Expr(sympy.sstr(value)))))

    # facts

    def facts(self, predicate: str) -> List[Fact]:
        return self._facts.get(predicate, [])

    def literal_nodes(self, *predicates: str) -> List[Tuple[str, Literal]]:
        """(key, literal) of literal nodes (not equation views) with these predicates."""
        out = []
        for pred in predicates:
            out.extend((f.key, f.literal) for f in self.facts(pred) if not f.key.startswith("Eq["))
        return out

    def key_of(self, item) -> Optional[str]:
        key = node_key(canonicalize(item) if isinstance(item, Literal) else item)
        return key if key in self.g.nodes and key not in self.skip else None

    def keys_of(self, items: Iterable) -> Optional[Tuple[str, ...]]:
        """Node keys of all items, or None when one is not in the graph."""
        keys = []
        for item in items:
            key = self.key_of(item)
            if key is None:
                return None
            keys.append(key)
        return tuple(keys)

    def _literal_items(self) -> List[Tuple[str, Literal]]:
        return sorted((k, v) for k, v in self.g.literals() if k not in self.skip)

    def staged(self, staged: Iterable[Staged]):
        """(premise keys, [equation]) for staged equations whose support is in the graph."""
        for s in staged:
            keys = self.keys_of(s.premises)
            if keys:
                yield keys, [s.equation]

    # quantities

    def L(self, a: str, b: str) -> sympy.Symbol:
        return length(a, b, self.table)

    def A(self, a: str, b: str, c: str) -> sympy.Symbol:
        return measure(a, b, c, self.table)

    def Q(self, lit: Literal) -> sympy.Symbol:
        return quantity_symbol(lit, self.table)

    def interior_angles(self, p: Sequence[str]) -> List[sympy.Symbol]:
        """One angle per vertex of the cycle p."""
        n = len(p)
        return [self.A(p[i - 1], p[i], p[(i + 1) % n]) for i in range(n)]

    def sides(self, p: Sequence[str]) -> List[sympy.Symbol]:
        n = len(p)
        return [self.L(p[i], p[(i + 1) % n]) for i in range(n)]

    def mentions(self, *symbols: sympy.Symbol) -> bool:
        return any(s in self.mentioned for s in symbols)

    def mentioned_angles(self) -> List[Tuple[str, str, str]]:
        """Point triples of every mentioned three-point angle measure."""
        out = []
        for symbol in sorted(self.mentioned, key=lambda s: s.name):
            origin = self.table.origin(symbol)
            if origin is None or origin.predicate != "MeasureOf":
                continue
            inner = origin.args[0]
            if isinstance(inner, Literal) and inner.predicate == "Angle" and len(inner.args) == 3:
                out.append(tuple(inner.point_names()))
        return out

    def value(self, symbol: sympy.Symbol) -> Optional[Tuple[sympy.Expr, str]]:
        return self.values.get(symbol)

    def equal(self, s1: sympy.Expr, s2: sympy.Expr) -> Optional[Tuple[str, ...]]:
        """Premise keys establishing s1 = s2, or None."""
        if s1 == s2:
            return ()
        key = Equation(s1, s2).key
        if key in self.g.nodes and key not in self.skip:
            return (key,)
        v1, v2 = self.values.get(s1), self.values.get(s2)
        if v1 is not None and v2 is not None and sympy.simplify(v1[0] - v2[0]) == 0:
            return (v1[1], v2[1])
        return None

    # structure

    def support(self, *names: str) -> Optional[Tuple[str, ...]]:
        """Keys of the literals putting the named points on one line."""
        chain = self.sketch.chain(*names)
        if chain is None:
            return () if len(set(names)) <= 2 else None
        if len(chain.points) == 2 and not chain.sources:
            return ()
        return self.keys_of(support(chain, *names))

    def line_id(self, segment: Sequence[str]):
        chain = self.sketch.chain(*segment)
        return chain.points if chain is not None else tuple(sorted(segment))

    def _line_relation(self, predicate: str, s1: Sequence[str], s2: Sequence[str]) -> Optional[str]:
        target = {self.line_id(s1), self.line_id(s2)}
        for key, lit in self.literal_nodes(predicate):
            segments = [a.point_names() for a in lit.args if isinstance(a, Literal) and a.predicate == "Line"]
            if len(segments) == 2 and {self.line_id(s) for s in segments} == target:
                return key
        return None

    def parallel_key(self, s1: Sequence[str], s2: Sequence[str]) -> Optional[str]:
        return self._line_relation("Parallel", s1, s2)

    def perpendicular_key(self, s1: Sequence[str], s2: Sequence[str]) -> Optional[str]:
        return self._line_relation("Perpendicular", s1, s2)

    def polygons(self, *predicates: str) -> List[Tuple[Literal, str]]:
        """Polygons in literal nodes (nested ones too) with the key of the node holding them."""
        wanted = set(predicates) or POLYGON_PREDICATES
        seen: Dict[Literal, str] = {}
        for key, lit in self._literal_items():
            for inner in walk(lit):
                if inner.predicate in wanted and inner not in seen:
                    seen[inner] = key
        return sorted(seen.items(), key=lambda kv: (kv[1], str(kv[0])))

    def triangles(self) -> List[Tuple[Tuple[str, str, str], str]]:
        return [(tuple(p.point_names()), key) for p, key in self.polygons("Triangle")]

    def circle_key(self, center: str) -> Optional[str]:
        """Key of a literal node mentioning the circle centered at center."""
        for key, lit in self._literal_items():
            for inner in walk(lit):
                if inner.predicate == "Circle" and inner.args and inner.args[0] == Point(center):
                    return key
        return None

    def membership(self, point: str, center: str) -> Optional[str]:
        """Key of PointLiesOnCircle(point, circle centered at center)."""
        for key, lit in self.literal_nodes("PointLiesOnCircle"):
            circle = lit.args[1]
            if lit.args[0] == Point(point) and isinstance(circle, Literal) and circle.args[:1] == (Point(center),):
                return key
        return None

    def on_circle(self, center: str) -> List[str]:
        info = self.sketch.circles.get(center)
        return sorted(info.points) if info is not None else []

    def non_collinear(self, *names: str) -> bool:
        return len(set(names)) == len(names) and not self.sketch.collinear(*names)
