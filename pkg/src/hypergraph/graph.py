"""
Directed acyclic proof hypergraph.
Path: src/hypergraph/graph.py

Nodes are canonical literals or equations, hyperedges are syllogistic steps
(premises --theorem--> conclusions). A trivial start node feeds every known
fact through the single "Known Facts" edge. Each node keeps its transitive
predecessor set so a step that would conclude an ancestor of its own
premises is rejected before it can close a cycle.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple, Union

from src.formal_lang.literal import Literal, canonicalize, print_literal

logger = logging.getLogger(__name__)

START = "start"
KNOWN_FACTS = "Known Facts"

CYCLE = "cycle"
REDUNDANT = "redundant"


class HypergraphError(Exception):
    """Base class for proof hypergraph errors"""


class EmptyFacts(HypergraphError):
    def __init__(self):
        super().__init__("a proof hypergraph needs at least one known fact")


class Unreachable(HypergraphError):
    def __init__(self, goal: str):
        self.goal = goal
        super().__init__(f"'{goal}' is not supported by any derivation from start")


@dataclass(frozen=True)
class Hyperedge:
    """One step; premises and conclusions are node keys in sorted order"""
    id: int
    theorem: str
    premises: Tuple[str, ...]
    conclusions: Tuple[str, ...]


@dataclass(frozen=True)
class Rejected:
    """add_step outcome when the edge is not inserted"""
    reason: str
    detail: str = ""


@dataclass(frozen=True)
class Contradiction:
    """A numeric contradiction found while expanding the graph"""
    premises: Tuple[str, ...]
    message: str


def node_key(item) -> str:
    """Identity of a node payload: printed canonical literal or the equation key."""
    if isinstance(item, Literal):
        return print_literal(canonicalize(item))
    key = getattr(item, "key", None)
    if key is None:
        raise TypeError(f"cannot use {item!r} as a hypergraph node")
    return key


class ProofHypergraph:
    """
    Node/edge store with incremental predecessor closures.

    Args:
        known: Known facts (literals or equations); duplicates collapse
    """

    def __init__(self, known: Iterable):
        self.nodes: Dict[str, object] = {START: None}
        self.edges: Dict[int, Hyperedge] = {}
        self.ancestors: Dict[str, FrozenSet[str]] = {START: frozenset()}
        self.producers: Dict[str, List[int]] = {}
        self.consumers: Dict[str, List[int]] = {}
        self.contradictions: List[Contradiction] = []
        self._signatures: Set[Tuple[str, Tuple[str, ...], Tuple[str, ...]]] = set()

        facts = list(known)
        if not facts:
            raise EmptyFacts()
        result = self.add_step([START], KNOWN_FACTS, facts)
        self.known_facts_edge = result

    # lookup

    def __contains__(self, item) -> bool:
        key = item if isinstance(item, str) else node_key(item)
        return key in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)

    def payload(self, key: str):
        return self.nodes[key]

    def keys_of(self, items: Iterable) -> List[str]:
        return [i if isinstance(i, str) else node_key(i) for i in items]

    def literals(self) -> List[Tuple[str, Literal]]:
        return [(k, v) for k, v in self.nodes.items() if isinstance(v, Literal)]

    def equations(self) -> List[Tuple[str, object]]:
        return [(k, v) for k, v in self.nodes.items() if k != START and not isinstance(v, Literal)]

    def is_ancestor(self, maybe_ancestor: str, key: str) -> bool:
        return maybe_ancestor in self.ancestors.get(key, frozenset())

    def text(self, key: str) -> str:
        return START if key == START else str(self.nodes[key])

    # mutation

    def add_step(self, premises: Iterable, theorem: str, conclusions: Iterable) -> Union[int, Rejected]:
        """
        Insert premises --theorem--> conclusions when it keeps the graph acyclic.

        Args:
            premises: Existing node keys or payloads
            theorem: Step label
            conclusions: Literal/equation payloads (existing ones reuse their node)

        Returns:
            The new edge id, or Rejected(cycle | redundant)
        """
        premise_keys = tuple(sorted(set(self.keys_of(premises))))
        missing = [p for p in premise_keys if p not in self.nodes]
        if missing:
            raise KeyError(f"unknown premise node(s): {', '.join(missing)}")
        if not premise_keys:
            raise ValueError("a step needs at least one premise")

        new_payloads: Dict[str, object] = {}
        for item in conclusions:
            payload = canonicalize(item) if isinstance(item, Literal) else item
            key = node_key(payload)
            if key not in premise_keys:
                new_payloads.setdefault(key, payload)
        if not new_payloads:
            return Rejected(REDUNDANT, "every conclusion is already a premise")

        upstream = set(premise_keys)
        for p in premise_keys:
            upstream |= self.ancestors[p]
        cyclic = sorted(k for k in new_payloads if k in upstream)
        if cyclic:
            return Rejected(CYCLE, f"{cyclic[0]} is an ancestor of the premises")

        conclusion_keys = tuple(sorted(new_payloads))
        signature = (theorem, premise_keys, conclusion_keys)
        if signature in self._signatures:
            return Rejected(REDUNDANT, "identical step already present")
        self._signatures.add(signature)

        edge = Hyperedge(len(self.edges), theorem, premise_keys, conclusion_keys)
        self.edges[edge.id] = edge
        for p in premise_keys:
            self.consumers.setdefault(p, []).append(edge.id)
        frozen_upstream = frozenset(upstream)
        for key, payload in new_payloads.items():
            if key not in self.nodes:
                self.nodes[key] = payload
                self.ancestors[key] = frozen_upstream
            else:
                self._extend_ancestors(key, frozen_upstream)
            self.producers.setdefault(key, []).append(edge.id)
        logger.debug("edge %d %s: %s => %s", edge.id, theorem, premise_keys, conclusion_keys)
        return edge.id

    def _extend_ancestors(self, key: str, extra: FrozenSet[str]) -> None:
        """Add extra to key's closure and push the growth to every descendant."""
        stack = [(key, extra)]
        while stack:
            node, more = stack.pop()
            grown = self.ancestors[node] | more
            if grown == self.ancestors[node]:
                continue
            self.ancestors[node] = grown
            for edge_id in self.consumers.get(node, []):
                for child in self.edges[edge_id].conclusions:
                    stack.append((child, grown | {node}))

    def record_contradiction(self, premises: Iterable, message: str) -> Contradiction:
        """Remember a contradiction; one entry per premise set."""
        keys = tuple(sorted(set(self.keys_of(premises))))
        for known in self.contradictions:
            if known.premises == keys:
                return known
        found = Contradiction(keys, message)
        self.contradictions.append(found)
        logger.info("contradiction: %s", message)
        return found

    # queries used by rules

    def support_edges(self, key: str) -> List[Hyperedge]:
        return [self.edges[i] for i in self.producers.get(key, [])]

    def check_acyclic(self) -> bool:
        return all(k not in anc for k, anc in self.ancestors.items())

    def reachable(self, exclude: Iterable[int] = ()) -> Set[str]:
        """Nodes derivable from start when the excluded edges are left out."""
        skipped = set(exclude)
        missing = {i: len(e.premises) for i, e in self.edges.items() if i not in skipped}
        reached = {START}
        frontier = [START]
        while frontier:
            key = frontier.pop()
            for edge_id in self.consumers.get(key, []):
                if edge_id not in missing:
                    continue
                missing[edge_id] -= 1
                if missing[edge_id]:
                    continue
                for child in self.edges[edge_id].conclusions:
                    if child not in reached:
                        reached.add(child)
                        frontier.append(child)
        return reached


def init(known: Iterable) -> ProofHypergraph:
    """Graph with start, one node per canonical fact and the Known Facts edge."""
    return ProofHypergraph(known)


def add_step(g: ProofHypergraph, premises: Iterable, theorem: str,
             conclusions: Iterable) -> Union[int, Rejected]:
    return g.add_step(premises, theorem, conclusions)
