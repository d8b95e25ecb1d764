"""
Relation completion.
Path: src/validation/completion.py

Supplements relations the formalization implies but does not state, up to a
fixpoint: perpendicular and parallel propagation over collinear subsegments,
circle membership implied by chords, radii, diameters and inscribed polygons,
and on-line facts implied by midpoints.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, List, Set, Tuple

from src.formal_lang import Literal, Point, canonicalize, line, print_literal

from .arguments import well_typed
from .sketch import GeometrySketch

logger = logging.getLogger(__name__)

PERPENDICULAR_PROPAGATION = "Perpendicular Propagation"
PARALLEL_PROPAGATION = "Parallel Propagation"
CHORD_ENDPOINTS = "Chord Endpoints"
DIAMETER_ENDPOINTS = "Diameter Endpoints"
RADIUS_ENDPOINT = "Radius Endpoint"
INSCRIBED_VERTICES = "Inscribed Vertices"
MIDPOINT_ON_SEGMENT = "Midpoint On Segment"

# completion rounds never exceed this; each round only adds literals over a finite universe
MAX_ROUNDS = 32


@dataclass(frozen=True)
class Completion:
    literal: Literal
    rule: str


def _propagate(sketch: GeometrySketch, predicate: str, rule: str) -> Iterator[Tuple[Literal, str]]:
    for rel in sketch.relations:
        if rel.predicate != predicate or not all(isinstance(a, Literal) and a.predicate == "Line" for a in rel.args):
            continue
        first, second = (sketch.chain(*seg.point_names()) for seg in rel.args)
        if first is None or second is None or first is second:
            continue
        for s1 in first.segments():
            for s2 in second.segments():
                yield Literal(predicate, (line(*s1), line(*s2))), rule


def _on_circle(point: str, circle: Literal, rule: str) -> Tuple[Literal, str]:
    return Literal("PointLiesOnCircle", (Point(point), circle)), rule


def _circle_membership(sketch: GeometrySketch) -> Iterator[Tuple[Literal, str]]:
    for lit in sketch.all_literals():
        pred = lit.predicate
        if pred in ("IsChordOf", "IsDiameterOf", "IsRadiusOf") and well_typed(lit):
            segment, circle = lit.args
            center = circle.args[0].name
            ends = segment.point_names()
            if pred == "IsRadiusOf":
                if center in ends:
                    for p in ends:
                        if p != center:
                            yield _on_circle(p, circle, RADIUS_ENDPOINT)
                continue
            rule = CHORD_ENDPOINTS if pred == "IsChordOf" else DIAMETER_ENDPOINTS
            for p in ends:
                if p != center:
                    yield _on_circle(p, circle, rule)
            if pred == "IsDiameterOf" and center not in ends:
                yield Literal("PointLiesOnLine", (Point(center), segment)), DIAMETER_ENDPOINTS
        elif pred in ("InscribedIn", "CircumscribedTo"):
            polygon, circle = lit.args if pred == "InscribedIn" else lit.args[::-1]
            if not (isinstance(polygon, Literal) and isinstance(circle, Literal) and circle.predicate == "Circle"):
                continue
            for p in polygon.point_names():
                yield _on_circle(p, circle, INSCRIBED_VERTICES)


def _midpoints(sketch: GeometrySketch) -> Iterator[Tuple[Literal, str]]:
    for lit in sketch.all_literals():
        if lit.predicate == "IsMidpointOf" and well_typed(lit):
            yield Literal("PointLiesOnLine", lit.args), MIDPOINT_ON_SEGMENT


def _candidates(sketch: GeometrySketch) -> Iterator[Tuple[Literal, str]]:
    yield from _propagate(sketch, "Perpendicular", PERPENDICULAR_PROPAGATION)
    yield from _propagate(sketch, "Parallel", PARALLEL_PROPAGATION)
    yield from _circle_membership(sketch)
    yield from _midpoints(sketch)


def _known_membership(sketch: GeometrySketch, lit: Literal) -> bool:
    """PointLiesOnCircle already known for the circle keyed by its center."""
    if lit.predicate != "PointLiesOnCircle":
        return False
    info = sketch.circles.get(lit.args[1].args[0].name)
    return info is not None and lit.args[0].name in info.points


def complete_relations(sketch: GeometrySketch) -> List[Completion]:
    """
    Relations implied by the sketch but absent from it, to a fixpoint.

    The input sketch is not modified; rebuild it with the returned literals
    as derived facts. Running again on that sketch returns [].
    """
    facts = list(sketch.facts)
    derived = list(sketch.derived)
    known: Set[Literal] = set(facts) | set(derived)
    added: List[Completion] = []
    current = sketch
    for _ in range(MAX_ROUNDS):
        fresh = []
        for lit, rule in _candidates(current):
            lit = canonicalize(lit)
            if lit in known or _known_membership(current, lit):
                continue
            known.add(lit)
            fresh.append(Completion(lit, rule))
        if not fresh:
            break
        for c in fresh:
            logger.debug("completed %s (%s)", print_literal(c.literal), c.rule)
        added.extend(fresh)
        derived.extend(c.literal for c in fresh)
        current = GeometrySketch(facts, derived)
    return sorted(added, key=lambda c: (print_literal(c.literal), c.rule))
