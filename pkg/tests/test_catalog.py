"""Non-isomorphic graph catalogs, re-counted by brute-force canonicalization."""

from itertools import permutations

import pytest

from minor_ramsey import catalog
from minor_ramsey import graph as gr

# Numbers of non-isomorphic simple graphs on n = 1..7 labeled-free vertices.
EXPECTED_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def canonical_form(g: gr.Graph) -> int:
    """Minimum edge bitmask over all vertex permutations."""
    pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
    index = {p: i for i, p in enumerate(pairs)}
    best = None
    for perm in permutations(range(g.n)):
        code = 0
        for u, v in g.edges():
            a, b = perm[u], perm[v]
            code |= 1 << index[(min(a, b), max(a, b))]
        if best is None or code < best:
            best = code
    return best or 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_catalog_counts_verified_independently(n):
    """The catalog on <= 5 vertices is exactly one representative per
    isomorphism class, checked against enumeration of all labeled graphs."""
    graphs = catalog.graphs_with_order(n)
    assert len(graphs) == EXPECTED_COUNTS[n]
    forms = {canonical_form(g) for g in graphs}
    assert len(forms) == len(graphs)  # pairwise non-isomorphic
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    all_forms = set()
    for code in range(1 << len(pairs)):
        g = gr.from_edge_list(n, [p for i, p in enumerate(pairs) if code >> i & 1])
        all_forms.add(canonical_form(g))
    assert forms == all_forms  # every class is represented


@pytest.mark.parametrize("n", [6, 7])
def test_catalog_counts_large(n):
    assert len(catalog.graphs_with_order(n)) == EXPECTED_COUNTS[n]


def test_catalog_guards():
    with pytest.raises(ValueError):
        catalog.graphs_with_order(8)
    assert catalog.graphs_with_order(0) == (gr.empty(0),)


def test_graphs_up_to_order():
    assert len(catalog.graphs_up_to_order(5)) == 1 + 2 + 4 + 11 + 34


def test_write_catalog_round_trip(tmp_path):
    path = tmp_path / "order4.g6"
    count = catalog.write_catalog(path, 4)
    assert count == 11
    lines = path.read_text().splitlines()
    parsed = [gr.parse_graph6(line) for line in lines]
    assert parsed == list(catalog.graphs_with_order(4))
