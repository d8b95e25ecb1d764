"""
Consolidated symbolic representation of a formalization.
Path: src/validation/sketch.py

Points, maximal collinear chains with their betweenness order, circles with
the points known to lie on them, declared polygons and relation facts.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.formal_lang import Expr, Literal, Point, canonicalize, collect_points, print_literal, walk
from src.formal_lang.catalog import POLYGON_PREDICATES

from .arguments import well_typed

logger = logging.getLogger(__name__)

# chains with more points than this keep only their declared betweenness
MAX_ORDERED_CHAIN = 8

_ON_LINE = "PointLiesOnLine"
_STRUCTURAL = {"Equals", "Find", "Line", "Angle", "Circle", "Arc", "Shape", "Sector"}


def _names(lit: Literal) -> List[str]:
    return [a.name for a in lit.args if isinstance(a, Point)]


@dataclass
class Chain:
    """
    Points of one line.

    Args:
        points: Chain points; in line order when the order is determined
        ordered: True when every consistent order is the same up to reversal
        orders: Every order consistent with the betweenness facts (first < last)
        between: Declared (middle, end, end) triples
        sources: Literals that put the points on this line
    """
    points: Tuple[str, ...]
    ordered: bool = False
    orders: Tuple[Tuple[str, ...], ...] = ()
    between: Tuple[Tuple[str, str, str], ...] = ()
    sources: Tuple[Literal, ...] = ()

    def __contains__(self, name: str) -> bool:
        return name in self.points

    def segments(self) -> List[Tuple[str, str]]:
        """Every pair of chain points, sorted."""
        return [tuple(sorted(p)) for p in combinations(sorted(self.points), 2)]

    def witnesses(self, *names: str) -> Tuple[Literal, ...]:
        """Source literals mentioning any of the given points (all sources when none do)."""
        hits = tuple(s for s in self.sources if set(names) & collect_points(s))
        return hits or self.sources


@dataclass
class CircleInfo:
    center: str
    radius: Optional[Expr] = None
    points: Set[str] = field(default_factory=set)
    sources: List[Literal] = field(default_factory=list)

    @property
    def literal(self) -> Literal:
        return Literal("Circle", (Point(self.center),))


def _consistent_orders(points: Sequence[str], between: Iterable[Tuple[str, str, str]]) -> List[Tuple[str, ...]]:
    constraints = list(between)
    orders = []
    for perm in permutations(sorted(points)):
        if perm[0] > perm[-1]:
            continue
        pos = {p: i for i, p in enumerate(perm)}
        if all(min(pos[a], pos[b]) < pos[m] < max(pos[a], pos[b]) for m, a, b in constraints):
            orders.append(perm)
    return orders


class GeometrySketch:
    """
    Symbolic picture of a formalization.

    Args:
        facts: Original literals of the formalization (no Find)
        derived: Literals added by relation completion
    """

    def __init__(self, facts: Iterable[Literal], derived: Iterable[Literal] = ()):
        self.facts: Tuple[Literal, ...] = tuple(canonicalize(f) for f in facts)
        self.derived: List[Literal] = [canonicalize(d) for d in derived]
        self.points: Set[str] = set()
        self.lines: List[Chain] = []
        self.circles: Dict[str, CircleInfo] = {}
        self.polygons: List[Literal] = []
        # first top-level literal each polygon appears in
        self.polygon_sources: Dict[Literal, Literal] = {}
        self.relations: List[Literal] = []
        # chains whose declared betweenness has no consistent order
        self.impossible: List[Chain] = []
        self._build()

    # construction

    def all_literals(self) -> List[Literal]:
        return list(self.facts) + list(self.derived)

    def _build(self) -> None:
        literals = self.all_literals()
        for lit in literals:
            self.points |= collect_points(lit)

        groups: List[Tuple[Set[str], List[Tuple[str, str, str]], List[Literal]]] = []
        for lit in literals:
            group = self._collinear_group(lit)
            if group is not None:
                members, between = group
                groups.append((set(members), list(between), [lit]))

        merged = True
        while merged:
            merged = False
            for i, j in combinations(range(len(groups)), 2):
                if len(groups[i][0] & groups[j][0]) >= 2:
                    a, b = groups[i], groups[j]
                    groups[i] = (a[0] | b[0], a[1] + b[1], a[2] + b[2])
                    del groups[j]
                    merged = True
                    break

        for members, between, sources in groups:
            chain = self._make_chain(members, between, sources)
            self.lines.append(chain)

        for lit in literals:
            for inner in walk(lit):
                names = _names(inner)
                if inner.predicate == "Line" and len(inner.args) == len(names) == 2:
                    a, b = names
                    if a != b and self.chain(a, b) is None:
                        self.lines.append(Chain((a, b) if a < b else (b, a), True, ((a, b) if a < b else (b, a),)))
        self.lines.sort(key=lambda c: c.points)

        for lit in literals:
            for inner in walk(lit):
                if inner.predicate == "Circle" and inner.args and isinstance(inner.args[0], Point):
                    info = self.circles.setdefault(inner.args[0].name, CircleInfo(inner.args[0].name))
                    if len(inner.args) == 2 and isinstance(inner.args[1], Expr) and info.radius is None:
                        info.radius = inner.args[1]
            if lit.predicate == "PointLiesOnCircle" and well_typed(lit):
                point, circle = lit.args
                info = self.circles.setdefault(circle.args[0].name, CircleInfo(circle.args[0].name))
                info.points.add(point.name)
                info.sources.append(lit)

        seen = set()
        for lit in literals:
            for inner in walk(lit):
                if inner.predicate in POLYGON_PREDICATES and inner not in seen:
                    seen.add(inner)
                    self.polygons.append(inner)
                    self.polygon_sources[inner] = lit
            if lit.predicate not in _STRUCTURAL and lit.predicate not in POLYGON_PREDICATES:
                self.relations.append(lit)

    @staticmethod
    def _collinear_group(lit: Literal):
        if lit.predicate in (_ON_LINE, "IsMidpointOf") and well_typed(lit):
            m = lit.args[0].name
            a, b = _names(lit.args[1])
            if m in (a, b):
                return None
            return (m, a, b), [(m, a, b)]
        if lit.predicate == "Collinear":
            return tuple(_names(lit)), []
        return None

    def _make_chain(self, members: Set[str], between, sources) -> Chain:
        between = tuple(sorted(set(between)))
        sources = tuple(sorted(set(sources), key=print_literal))
        if len(members) > MAX_ORDERED_CHAIN:
            logger.debug("chain of %d points keeps declared betweenness only", len(members))
            return Chain(tuple(sorted(members)), False, (), between, sources)
        orders = tuple(_consistent_orders(members, between))
        if not orders:
            chain = Chain(tuple(sorted(members)), False, (), between, sources)
            self.impossible.append(chain)
            return chain
        ordered = len(orders) == 1
        points = orders[0] if ordered else tuple(sorted(members))
        return Chain(points, ordered, orders, between, sources)

    # queries

    def chain(self, *names: str) -> Optional[Chain]:
        """The line containing all given points (two points determine it)."""
        for c in self.lines:
            if all(n in c.points for n in names):
                return c
        return None

    def collinear(self, *names: str) -> bool:
        if len(set(names)) < 3:
            return True
        return self.chain(*names) is not None

    def between(self, m: str, a: str, b: str) -> bool:
        """m lies strictly between a and b in every consistent order."""
        if len({m, a, b}) < 3:
            return False
        c = self.chain(m, a, b)
        if c is None:
            return False
        if c.orders:
            return all(min(o.index(a), o.index(b)) < o.index(m) < max(o.index(a), o.index(b)) for o in c.orders)
        return (m, a, b) in c.between or (m, b, a) in c.between

    def same_ray(self, v: str, p: str, q: str) -> bool:
        """p and q lie on the same ray from v."""
        if v in (p, q):
            return False
        if p == q:
            return True
        c = self.chain(v, p, q)
        if c is None:
            return False
        if c.orders:
            return all(not (min(o.index(p), o.index(q)) < o.index(v) < max(o.index(p), o.index(q)))
                       for o in c.orders)
        return self.between(p, v, q) or self.between(q, v, p)

    def ray(self, v: str, p: str) -> List[str]:
        """Points on the ray from v through p, p included."""
        c = self.chain(v, p)
        if c is None:
            return [p]
        return sorted(q for q in c.points if q != v and self.same_ray(v, p, q))

    def line_points(self, segment: Sequence[str]) -> Tuple[str, ...]:
        """Points of the line through a segment (the segment itself when undeclared)."""
        c = self.chain(*segment)
        return c.points if c is not None else tuple(sorted(segment))

    def intersection(self, a: Sequence[str], b: Sequence[str]) -> Optional[str]:
        """Common point of the lines through segment a and segment b."""
        pa, pb = set(self.line_points(a)), set(self.line_points(b))
        if pa == pb:
            return None
        common = sorted(pa & pb)
        return common[0] if len(common) == 1 else None

    def crossings(self) -> List[Tuple[str, Chain, Chain]]:
        """(E, chain1, chain2) where E is strictly inside both chains."""
        out = []
        for c1, c2 in combinations(self.lines, 2):
            common = set(c1.points) & set(c2.points)
            if len(common) != 1:
                continue
            e = next(iter(common))
            if self._interior(e, c1) and self._interior(e, c2):
                out.append((e, c1, c2))
        return out

    def _interior(self, e: str, c: Chain) -> bool:
        return any(self.between(e, a, b) for a, b in combinations(c.points, 2))

    def on_circle(self, name: str) -> List[str]:
        """Centers of the circles a point lies on."""
        return sorted(o for o, info in self.circles.items() if name in info.points)

    def polygon_cycle(self, names: Sequence[str]) -> Optional[Literal]:
        """Declared polygon whose vertex cycle is names (either direction)."""
        n = len(names)
        for poly in self.polygons:
            verts = _names(poly)
            if len(verts) != n:
                continue
            for seq in (verts, verts[::-1]):
                for shift in range(n):
                    if tuple(seq[shift:] + seq[:shift]) == tuple(names):
                        return poly
        return None
