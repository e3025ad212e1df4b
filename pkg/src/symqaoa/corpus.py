"""Generation of all connected non-isomorphic graphs on up to 8 vertices.

Graphs grow one vertex at a time: every representative on k-1 vertices is
extended by a new vertex with every possible neighborhood, and the candidates
are deduplicated up to isomorphism (Weisfeiler-Lehman hash buckets refined by
exact isomorphism checks). For 8 vertices this yields 12,346 graphs, 11,117
of them connected.
"""

from __future__ import annotations

import networkx as nx
from networkx.algorithms.graph_hashing import weisfeiler_lehman_graph_hash

from .graphs import Graph, encode_graph6, graph_from_edges

CORPUS_VERTEX_BUDGET = 9


def generate_nonisomorphic(n: int, progress=None) -> list[Graph]:
    """All non-isomorphic simple graphs on exactly n vertices."""
    if not (1 <= n <= CORPUS_VERTEX_BUDGET):
        raise ValueError(f"corpus generation budget is n <= {CORPUS_VERTEX_BUDGET}")
    reps = [nx.empty_graph(1)]
    for size in range(2, n + 1):
        buckets: dict[str, list[nx.Graph]] = {}
        grown: list[nx.Graph] = []
        for base in reps:
            for neighborhood in range(1 << (size - 1)):
                cand = base.copy()
                cand.add_node(size - 1)
                for v in range(size - 1):
                    if (neighborhood >> v) & 1:
                        cand.add_edge(v, size - 1)
                key = weisfeiler_lehman_graph_hash(cand, iterations=3)
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(cand, seen) for seen in bucket):
                    bucket.append(cand)
                    grown.append(cand)
        reps = grown
        if progress:
            progress(size, len(reps))
    out = [graph_from_edges(g.number_of_nodes(), g.edges()) for g in reps]
    out.sort(key=lambda g: (g.m, encode_graph6(g)))
    return out


def generate_connected(n: int, progress=None) -> list[Graph]:
    """All connected non-isomorphic simple graphs on exactly n vertices."""
    return [g for g in generate_nonisomorphic(n, progress) if _is_connected(g)]


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    stack = [0]
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n
