import json
import sys
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra import Equation, SymbolTable, length
from src.formal_lang import parse_logic_form
from src.hypergraph.export import dump_graph, graph_to_dict
from src.hypergraph.graph import (
    CYCLE, KNOWN_FACTS, REDUNDANT, START, EmptyFacts, ProofHypergraph, Rejected, Unreachable, add_step, init,
    node_key,
)
from src.hypergraph.minimal import find_minimal_subgraph, topological_order


def lit(text):
    return parse_logic_form(text)


@pytest.fixture
def facts():
    return [lit("Line(A,B)"), lit("Line(A,C)")]


@pytest.fixture
def diamond(facts):
    """
    Known AB, AC; AB -> AD, AC -> AE, AD+AE -> AF and a shortcut AB+AC -> AF.
    """
    g = ProofHypergraph(facts)
    ab, ac = (node_key(f) for f in facts)
    g.add_step([ab], "left", [lit("Line(A,D)")])
    g.add_step([ac], "right", [lit("Line(A,E)")])
    g.add_step(["Line(A,D)", "Line(A,E)"], "join", [lit("Line(A,F)")])
    g.add_step([ab, ac], "shortcut", [lit("Line(A,F)")])
    return g


def test_empty_facts_are_rejected():
    with pytest.raises(EmptyFacts):
        ProofHypergraph([])


def test_known_facts_hang_off_start(facts):
    g = ProofHypergraph(facts + facts[:1])
    assert len(g) == 3
    edge = g.edges[g.known_facts_edge]
    assert edge.theorem == KNOWN_FACTS
    assert edge.premises == (START,)


def test_node_keys_are_canonical():
    assert node_key(lit("Line(B,A)")) == "Line(A,B)"
    assert node_key(lit("Angle(C,B,A)")) == node_key(lit("Angle(A,B,C)"))
    with pytest.raises(TypeError):
        node_key(42)


def test_add_step_returns_the_edge_id(facts):
    g = ProofHypergraph(facts)
    edge_id = g.add_step(["Line(A,B)"], "derive", [lit("Line(A,D)")])
    assert edge_id == 1
    assert lit("Line(D,A)") in g
    assert g.is_ancestor("Line(A,B)", "Line(A,D)")
    assert g.is_ancestor(START, "Line(A,D)")


def test_step_closing_a_cycle_is_rejected(diamond):
    result = diamond.add_step(["Line(A,F)"], "back", [lit("Line(A,D)")])
    assert isinstance(result, Rejected)
    assert result.reason == CYCLE
    assert diamond.check_acyclic()


def test_repeated_step_is_redundant(diamond):
    result = diamond.add_step(["Line(A,B)"], "left", [lit("Line(A,D)")])
    assert result == Rejected(REDUNDANT, "identical step already present")


def test_step_concluding_only_its_premises_is_redundant(facts):
    g = ProofHypergraph(facts)
    result = g.add_step(["Line(A,B)"], "restate", [lit("Line(B,A)")])
    assert isinstance(result, Rejected) and result.reason == REDUNDANT


def test_unknown_premise_raises(facts):
    g = ProofHypergraph(facts)
    with pytest.raises(KeyError):
        g.add_step(["Line(X,Y)"], "derive", [lit("Line(A,D)")])


def test_literals_and_equations_share_the_graph(facts):
    table = SymbolTable()
    g = ProofHypergraph(facts + [Equation(length("A", "B", table), 5)])
    assert len(g.literals()) == 2
    assert len(g.equations()) == 1


def test_contradictions_are_recorded_once(facts):
    g = ProofHypergraph(facts)
    first = g.record_contradiction(["Line(A,C)", "Line(A,B)"], "AB = 1 and AB = 2")
    again = g.record_contradiction(["Line(A,B)", "Line(A,C)"], "other wording")
    assert first is again
    assert len(g.contradictions) == 1


def test_minimal_subgraph_takes_the_shortcut(diamond):
    sub = find_minimal_subgraph(diamond, "Line(A,F)")
    assert sub.edges == (0, 4)
    assert len(sub) == 2
    assert sub.exact
    assert set(sub.nodes) == {START, "Line(A,B)", "Line(A,C)", "Line(A,F)"}


def test_minimal_subgraph_prunes_unused_known_facts(diamond):
    sub = find_minimal_subgraph(diamond, "Line(A,D)")
    assert sub.edges == (0, 1)
    assert sub.conclusions[0] == ("Line(A,B)",)


def test_unreachable_goal(diamond):
    with pytest.raises(Unreachable):
        find_minimal_subgraph(diamond, "Line(X,Y)")


def test_topological_order_starts_with_known_facts(facts):
    g = ProofHypergraph(facts)
    g.add_step(["Line(A,B)"], "left", [lit("Line(A,D)")])
    g.add_step(["Line(A,C)"], "right", [lit("Line(A,E)")])
    g.add_step(["Line(A,D)", "Line(A,E)"], "join", [lit("Line(A,F)")])
    order = topological_order(find_minimal_subgraph(g, "Line(A,F)"))
    assert order == [0, 1, 2, 3]


def _reaches(g, edges, goal):
    reached = {START}
    changed = True
    while changed:
        changed = False
        for e in edges:
            edge = g.edges[e]
            if set(edge.premises) <= reached and not set(edge.conclusions) <= reached:
                reached |= set(edge.conclusions)
                changed = True
    return goal in reached


def _fewest_edges(g, goal):
    ids = sorted(g.edges)
    for k in range(1, len(ids) + 1):
        if any(_reaches(g, combo, goal) for combo in combinations(ids, k)):
            return k
    return None


@pytest.mark.parametrize("seed", range(100))
def test_minimal_subgraph_matches_enumeration_on_random_graphs(seed):
    rng = np.random.default_rng(seed)
    nodes = [lit(f"Line(A,{c})") for c in "BCDEFGHK"]
    keys = [node_key(n) for n in nodes]
    g = ProofHypergraph(nodes[:2])
    for _ in range(10):
        target = int(rng.integers(2, len(nodes)))
        present = [k for k in keys[:target] if k in g]
        size = min(len(present), int(rng.integers(1, 3)))
        premises = [present[i] for i in rng.choice(len(present), size=size, replace=False)]
        g.add_step(premises, f"step{target}", [nodes[target]])

    for key in keys:
        if key not in g:
            continue
        sub = find_minimal_subgraph(g, key)
        assert len(sub) == _fewest_edges(g, key)
        assert _reaches(g, sub.edges, key)


def test_graph_dump(diamond, tmp_path):
    full = graph_to_dict(diamond)
    assert full["edges"][0]["theorem"] == KNOWN_FACTS
    assert full["edges"][0]["premises"] == [START]
    assert len(full["edges"]) == 5
    assert {"id": "Line(A,F)", "text": "Line(A,F)"} in full["nodes"]

    sub = find_minimal_subgraph(diamond, "Line(A,F)")
    path = dump_graph(diamond, tmp_path / "out" / "graph.json", sub)
    dumped = json.loads(path.read_text(encoding="utf-8"))
    assert [e["theorem"] for e in dumped["edges"]] == [KNOWN_FACTS, "shortcut"]
    assert dumped == json.loads(json.dumps(graph_to_dict(diamond, sub), sort_keys=True))


def test_module_level_operations(facts):
    g = init(facts)
    assert add_step(g, ["Line(A,B)"], "derive", [lit("Line(A,D)")]) == 1
    assert isinstance(add_step(g, ["Line(A,D)"], "back", [lit("Line(A,B)")]), Rejected)


def test_reachability_without_some_edges(diamond):
    assert diamond.reachable() == set(diamond.nodes)
    without_left = diamond.reachable(exclude=[1])
    assert "Line(A,D)" not in without_left
    assert "Line(A,F)" in without_left
    assert "Line(A,F)" not in diamond.reachable(exclude=[1, 4])


def test_minimal_subgraph_skips_excluded_edges(diamond):
    sub = find_minimal_subgraph(diamond, "Line(A,F)", exclude=[4])
    assert sub.edges == (0, 1, 2, 3)
    with pytest.raises(Unreachable):
        find_minimal_subgraph(diamond, "Line(A,F)", exclude=[3, 4])
