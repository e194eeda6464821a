"""Catalogs of pairwise non-isomorphic graphs on up to 7 vertices.

Backed by the networkx graph atlas; converted to this package's graphs and
exportable as graph6 files for the cross-check suites.  Counts per order
(1, 2, 4, 11, 34, 156, 1044) are re-verified independently for n <= 5 by
brute-force canonicalization in the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from . import graph as gr
from .graph import Graph

ATLAS_MAX_N = 7


@lru_cache(maxsize=None)
def graphs_with_order(n: int) -> tuple[Graph, ...]:
    """All non-isomorphic graphs on exactly n vertices, 0 <= n <= 7."""
    if not 0 <= n <= ATLAS_MAX_N:
        raise ValueError(f"catalog covers 0 <= n <= {ATLAS_MAX_N}")
    if n == 0:
        return (gr.empty(0),)
    import networkx as nx
    out = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == n:
            nodes = sorted(g.nodes())
            index = {v: i for i, v in enumerate(nodes)}
            out.append(gr.from_edge_list(
                n, [(index[u], index[v]) for u, v in g.edges()]))
    return tuple(out)


def graphs_up_to_order(n: int) -> list[Graph]:
    """All non-isomorphic graphs on 1..n vertices."""
    out: list[Graph] = []
    for i in range(1, n + 1):
        out.extend(graphs_with_order(i))
    return out


def write_catalog(path, n: int) -> int:
    """Write the order-n catalog as one graph6 string per line; returns the
    number of graphs written."""
    graphs = graphs_with_order(n)
    Path(path).write_text(
        "".join(gr.write_graph6(g) + "\n" for g in graphs))
    return len(graphs)
