"""
Literal AST, canonical forms and printing.
Path: src/formal_lang/literal.py
"""
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, List, Sequence, Set, Tuple, Union

from .catalog import (
    CORRESPONDENCE, CYCLE, SEGMENT, UNORDERED, VERTEX, lookup,
)


@dataclass(frozen=True)
class Point:
    """Identifier argument: a point or label (uppercase-initial)"""
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Expr:
    """Expression argument, kept as whitespace-free source text"""
    text: str

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Literal:
    """Predicate applied to an ordered argument tuple"""
    predicate: str
    args: Tuple["Arg", ...] = ()

    def __str__(self) -> str:
        return print_literal(self)

    @property
    def arity(self) -> int:
        return len(self.args)

    def point_names(self) -> List[str]:
        """Names of direct Point arguments, in order."""
        return [a.name for a in self.args if isinstance(a, Point)]


Arg = Union[Point, Expr, Literal]


def print_literal(arg: Arg) -> str:
    """Print an argument tree in the compact one-line formal syntax."""
    if isinstance(arg, Literal):
        if not arg.args:
            return arg.predicate
        return f"{arg.predicate}({','.join(print_literal(a) for a in arg.args)})"
    return str(arg)


def _key(arg: Arg) -> str:
    return print_literal(arg)


def _min_cycle(items: Sequence[Arg]) -> Tuple[Arg, ...]:
    n = len(items)
    best = None
    for seq in (list(items), list(reversed(items))):
        for shift in range(n):
            cand = tuple(seq[shift:] + seq[:shift])
            if best is None or [_key(a) for a in cand] < [_key(a) for a in best]:
                best = cand
    return best


def vertex_relabelings(predicate: str, n: int) -> Iterator[Tuple[int, ...]]:
    """Index permutations that keep a figure the same figure."""
    if predicate == "Triangle":
        yield from permutations(range(n))
        return
    base = list(range(n))
    for seq in (base, base[::-1]):
        for shift in range(n):
            yield tuple(seq[shift:] + seq[:shift])


def _canonical_correspondence(lit: Literal) -> Literal:
    first, second = lit.args
    if (isinstance(first, Literal) and isinstance(second, Literal)
            and first.predicate == second.predicate
            and len(first.args) == len(second.args) >= 3
            and all(isinstance(a, Point) for a in first.args + second.args)):
        best = None
        for perm in vertex_relabelings(first.predicate, len(first.args)):
            a = Literal(first.predicate, tuple(first.args[i] for i in perm))
            b = Literal(second.predicate, tuple(second.args[i] for i in perm))
            for pair in ((a, b), (b, a)):
                key = (_key(pair[0]), _key(pair[1]))
                if best is None or key < best[0]:
                    best = (key, pair)
        return Literal(lit.predicate, best[1])
    args = tuple(sorted((canonicalize(a) for a in lit.args), key=_key))
    return Literal(lit.predicate, args)


def canonicalize(arg: Arg) -> Arg:
    """
    Return the canonical representative of an argument tree.

    Line endpoints are sorted, Angle(A,B,C) is reversed when C < A, unordered
    predicates sort their arguments, polygons take the lexicographically
    smallest rotation/reflection, Similar/Congruent relabel both figures jointly
    so the vertex correspondence survives.
    """
    if not isinstance(arg, Literal):
        return arg
    spec = lookup(arg.predicate)
    if spec is None:
        return Literal(arg.predicate, tuple(canonicalize(a) for a in arg.args))
    symmetry = spec.symmetry_for(len(arg.args))
    if symmetry == CORRESPONDENCE and len(arg.args) == 2:
        return _canonical_correspondence(arg)

    args = tuple(canonicalize(a) for a in arg.args)
    if symmetry in (SEGMENT, UNORDERED):
        args = tuple(sorted(args, key=_key))
    elif symmetry == VERTEX and _key(args[2]) < _key(args[0]):
        args = args[::-1]
    elif symmetry == CYCLE and len(args) >= 3:
        args = _min_cycle(args)
    return Literal(arg.predicate, args)


def same_literal(a: Arg, b: Arg) -> bool:
    return canonicalize(a) == canonicalize(b)


def collect_points(arg: Arg, out: Set[str] = None) -> Set[str]:
    """All point names referenced anywhere in an argument tree."""
    out = set() if out is None else out
    if isinstance(arg, Point):
        out.add(arg.name)
    elif isinstance(arg, Literal):
        for a in arg.args:
            collect_points(a, out)
    return out


def walk(arg: Arg) -> Iterator[Literal]:
    """Yield every Literal in the tree, outermost first."""
    if isinstance(arg, Literal):
        yield arg
        for a in arg.args:
            yield from walk(a)


# Small constructors used by the theorem rules and tests

def line(a: str, b: str) -> Literal:
    return canonicalize(Literal("Line", (Point(a), Point(b))))


def angle(a: str, b: str, c: str) -> Literal:
    return canonicalize(Literal("Angle", (Point(a), Point(b), Point(c))))


def figure(predicate: str, *names: str) -> Literal:
    return canonicalize(Literal(predicate, tuple(Point(n) for n in names)))


def apply(predicate: str, *args: Arg) -> Literal:
    return canonicalize(Literal(predicate, tuple(args)))
