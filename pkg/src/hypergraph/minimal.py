"""
Minimal supporting sub-hypergraph and deterministic step order.
Path: src/hypergraph/minimal.py
"""
import heapq
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

import networkx as nx

from .graph import START, ProofHypergraph, Unreachable

logger = logging.getLogger(__name__)

Support = FrozenSet[int]


@dataclass
class SubHypergraph:
    """
    Edge set E* supporting one goal node.

    Args:
        graph: The full graph the edges belong to
        goal: Goal node key (the single sink)
        edges: Kept edge ids, ascending
        conclusions: Per kept edge, the conclusions used downstream (or the goal)
        beam_bound: True when the beam cap discarded candidate supports
        exact: True when minimality was verified by enumeration
    """
    graph: ProofHypergraph
    goal: str
    edges: Tuple[int, ...]
    conclusions: Dict[int, Tuple[str, ...]] = field(default_factory=dict)
    beam_bound: bool = False
    exact: bool = False

    @property
    def nodes(self) -> List[str]:
        keys: Set[str] = {START}
        for e in self.edges:
            keys |= set(self.graph.edges[e].premises)
            keys |= set(self.conclusions[e])
        return sorted(keys)

    def premises(self, edge_id: int) -> Tuple[str, ...]:
        return self.graph.edges[edge_id].premises

    def __len__(self) -> int:
        return len(self.edges)


def _order_key(support: Support) -> Tuple[int, Tuple[int, ...]]:
    return len(support), tuple(sorted(support))


def _top(candidates: Iterable[Support], cap: int) -> Tuple[List[Support], bool]:
    unique = sorted(set(candidates), key=_order_key)
    return unique[:cap], len(unique) > cap


def _node_dag(g: ProofHypergraph) -> nx.DiGraph:
    dag = nx.DiGraph()
    dag.add_nodes_from(g.nodes)
    for edge in g.edges.values():
        for p in edge.premises:
            for c in edge.conclusions:
                dag.add_edge(p, c)
    return dag


def _supports(g: ProofHypergraph, edges: Iterable[int], goal: str) -> bool:
    """Forward chaining from start over the given edges reaches goal."""
    reached = {START}
    pending = set(edges)
    progress = True
    while progress and goal not in reached:
        progress = False
        for e in sorted(pending):
            edge = g.edges[e]
            if all(p in reached for p in edge.premises):
                reached |= set(edge.conclusions)
                pending.discard(e)
                progress = True
    return goal in reached


def _cone(g: ProofHypergraph, goal: str) -> List[int]:
    """Edges that can contribute to goal: producers of goal and of its ancestors."""
    relevant = set(g.ancestors[goal]) | {goal}
    return sorted(e.id for e in g.edges.values() if set(e.conclusions) & relevant)


def _prune(g: ProofHypergraph, edges: Tuple[int, ...], goal: str) -> Dict[int, Tuple[str, ...]]:
    needed = {goal}
    for e in edges:
        needed |= set(g.edges[e].premises)
    return {e: tuple(c for c in g.edges[e].conclusions if c in needed) for e in edges}


def find_minimal_subgraph(g: ProofHypergraph, goal: str, beam_cap: int = 8,
                          exact_limit: int = 16, exclude: Iterable[int] = ()) -> SubHypergraph:
    """
    Fewest-edge support of goal.

    Supports are edge SETS (shared premises are paid for once), computed by
    a dynamic program over nodes in topological order that keeps up to
    beam_cap candidate supports per node. When the goal's cone has at most
    exact_limit edges the result is checked against enumeration of all
    smaller edge subsets. Ties go to the lexicographically least id tuple.
    Edges in exclude (refuted root branches) take no part.

    Raises:
        Unreachable: goal is not a node or no derivation reaches it
    """
    if goal not in g.nodes:
        raise Unreachable(goal)
    skipped = frozenset(exclude)
    best: Dict[str, List[Support]] = {START: [frozenset()]}
    beam_bound = False
    for node in nx.lexicographical_topological_sort(_node_dag(g)):
        if node == START:
            continue
        candidates: List[Support] = []
        for edge in g.support_edges(node):
            if edge.id in skipped:
                continue
            partial: List[Support] = [frozenset({edge.id})]
            for p in edge.premises:
                if p not in best or not best[p]:
                    partial = []
                    break
                partial, cut = _top((a | b for a in partial for b in best[p]), beam_cap)
                beam_bound = beam_bound or cut
            candidates.extend(partial)
        best[node], cut = _top(candidates, beam_cap)
        beam_bound = beam_bound or cut

    if not best.get(goal):
        raise Unreachable(goal)
    chosen = tuple(sorted(best[goal][0]))

    cone = [e for e in _cone(g, goal) if e not in skipped]
    exact = len(cone) <= exact_limit
    if exact:
        for k in range(1, len(chosen)):
            found = next((c for c in combinations(cone, k) if _supports(g, c, goal)), None)
            if found is not None:
                logger.debug("enumeration improved support of %s from %d to %d edges", goal, len(chosen), k)
                chosen = tuple(found)
                break
    if beam_bound:
        logger.info("beam cap %d bound while extracting the support of %s", beam_cap, goal)
    return SubHypergraph(g, goal, chosen, _prune(g, chosen, goal), beam_bound, exact)


def topological_order(sub: SubHypergraph) -> List[int]:
    """
    Kahn's algorithm over the kept edges.

    An edge comes after every kept edge concluding one of its premises;
    among ready edges the least (theorem, premise strings) goes first.
    """
    g = sub.graph
    producers: Dict[str, List[int]] = {}
    for e in sub.edges:
        for c in sub.conclusions[e]:
            producers.setdefault(c, []).append(e)

    waiting: Dict[int, Set[int]] = {}
    dependents: Dict[int, List[int]] = {e: [] for e in sub.edges}
    for e in sub.edges:
        deps = set()
        for p in g.edges[e].premises:
            deps |= set(producers.get(p, []))
        deps.discard(e)
        waiting[e] = deps
        for d in deps:
            dependents[d].append(e)

    def key(e: int):
        edge = g.edges[e]
        return edge.theorem, tuple(g.text(p) for p in edge.premises), e

    ready = [key(e) for e in sub.edges if not waiting[e]]
    heapq.heapify(ready)
    order: List[int] = []
    while ready:
        *_, e = heapq.heappop(ready)
        order.append(e)
        for d in dependents[e]:
            waiting[d].discard(e)
            if not waiting[d]:
                heapq.heappush(ready, key(d))
    return order
