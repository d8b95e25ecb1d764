"""
Deterministic JSON dump of a proof hypergraph.
Path: src/hypergraph/export.py
"""
import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

from .graph import ProofHypergraph
from .minimal import SubHypergraph


def graph_to_dict(g: ProofHypergraph, sub: Optional[SubHypergraph] = None) -> Dict[str, Any]:
    """
    nodes[] and edges[{theorem, premises, conclusions}] as node texts.

    With sub given, only its edges (with pruned conclusions) are dumped.
    """
    if sub is None:
        edge_ids = sorted(g.edges)
        conclusions = {e: g.edges[e].conclusions for e in edge_ids}
        node_keys = sorted(g.nodes)
    else:
        edge_ids = list(sub.edges)
        conclusions = sub.conclusions
        node_keys = sub.nodes

    return {
        "nodes": [{"id": k, "text": g.text(k)} for k in node_keys],
        "edges": [
            {
                "id": e,
                "theorem": g.edges[e].theorem,
                "premises": [g.text(p) for p in g.edges[e].premises],
                "conclusions": [g.text(c) for c in conclusions[e]],
            }
            for e in edge_ids
        ],
        "contradictions": [
            {"premises": [g.text(p) for p in c.premises], "message": c.message}
            for c in g.contradictions
        ],
    }


def dump_graph(g: ProofHypergraph, path: Union[str, Path], sub: Optional[SubHypergraph] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(graph_to_dict(g, sub), f, indent=2, ensure_ascii=False, sort_keys=True)
    return path
