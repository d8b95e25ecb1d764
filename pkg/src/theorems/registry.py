"""
Theorem registry and the deductive expansion pass.
Path: src/theorems/registry.py
"""
import logging
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from src.algebra import SymbolTable
from src.hypergraph.graph import ProofHypergraph, Rejected
from src.validation.sketch import GeometrySketch

from . import circles, lines, polygons, triangles
from .context import RuleContext
from .matching import instantiate_all
from .rule import TheoremRule

logger = logging.getLogger(__name__)


class TheoremRegistry:
    """
    Ordered set of theorem rules.

    One theorem name may own several hooks (e.g. the triangle midsegment
    theorem from two midpoints or from a declared midsegment); registering
    the same hook twice is an error.
    """

    def __init__(self, rules: Iterable[TheoremRule] = ()):
        self._rules: List[TheoremRule] = []
        for rule in rules:
            self.register(rule)

    def register(self, rule: TheoremRule) -> None:
        if any(r.conclude is rule.conclude for r in self._rules):
            raise ValueError(f"rule {rule.name!r} registered twice")
        self._rules.append(rule)

    def __iter__(self) -> Iterator[TheoremRule]:
        return iter(self._rules)

    def __len__(self) -> int:
        return len(self._rules)

    def names(self) -> List[str]:
        return sorted({r.name for r in self._rules})

    def select(self, names: Iterable[str]) -> "TheoremRegistry":
        """Registry restricted to the given theorem names."""
        wanted = set(names)
        unknown = wanted - set(self.names())
        if unknown:
            raise KeyError(f"unknown theorem(s): {', '.join(sorted(unknown))}")
        return TheoremRegistry(r for r in self._rules if r.name in wanted)


@lru_cache(maxsize=1)
def default_registry() -> TheoremRegistry:
    return TheoremRegistry(lines.RULES + triangles.RULES + polygons.RULES + circles.RULES)


def list_theorems(registry: Optional[TheoremRegistry] = None) -> List[Tuple[str, str]]:
    """(name, statement) per theorem name, sorted by name."""
    statements: Dict[str, str] = {}
    for rule in registry or default_registry():
        statements.setdefault(rule.name, rule.statement)
    return sorted(statements.items())


def deductive_pass(g: ProofHypergraph, sketch: GeometrySketch, registry: Optional[TheoremRegistry] = None, *,
                   table: Optional[SymbolTable] = None, goal=None, skip: Iterable[str] = ()) -> int:
    """
    Match every rule against a snapshot of the graph and add the resulting steps.

    Steps re-deriving known nodes from other premises are kept as alternative
    derivations; add_step rejects exact repeats.

    Args:
        g: Proof hypergraph, extended in place
        sketch: Sketch of the validated formalization
        registry: Rules to apply (default catalog when None)
        table: Symbol table shared with the algebra pass
        goal: Target term, used to decide which quantities are mentioned
        skip: Node keys the rules must not build on (nodes of refuted root branches)

    Returns:
        Number of hyperedges added
    """
    ctx = RuleContext(g, sketch, table, goal=goal, skip=skip)
    added = 0
    for inst in instantiate_all(registry or default_registry(), ctx):
        result = g.add_step(inst.premises, inst.rule, inst.conclusions)
        if isinstance(result, Rejected):
            logger.debug("%s rejected: %s", inst.rule, result.reason)
            continue
        added += 1
    logger.info("deductive pass added %d step(s)", added)
    return added
