"""Colorings, exhaustive searches, constructions, and the guided finder."""

import pytest

from minor_ramsey import minors, ramsey
from minor_ramsey import graph as gr
from minor_ramsey.ramsey import (
    ALL_FORCED,
    COUNTEREXAMPLE,
    INDETERMINATE,
    EdgeColoring,
    clique_target,
    color_class,
    coloring_from_red,
    exhaustive_check,
    minor_target,
    parse_coloring,
    path_subgraph_target,
    pigeonhole_upper_bound,
    proof_guided_finder,
    target_contains,
    verify_lower_bound,
    walecki,
    write_coloring,
)


# ---------------------------------------------------------------------------
# Coloring data type and text format.

def test_coloring_validation():
    with pytest.raises(ValueError):
        EdgeColoring(3, 2, (0, 1))          # wrong edge count
    with pytest.raises(ValueError):
        EdgeColoring(3, 2, (0, 1, 2))       # color out of range
    with pytest.raises(ValueError):
        EdgeColoring(3, 0, ())              # no colors


def test_color_classes_partition_edges():
    c = ramsey.c6_triangle()
    red, blue = color_class(c, 0), color_class(c, 1)
    assert red.m + blue.m == 15
    assert gr.complement(red) == blue
    with pytest.raises(ValueError):
        color_class(c, 2)


def test_coloring_round_trip():
    c = walecki(3)
    assert parse_coloring(write_coloring(c)) == c


def test_parse_coloring_rejects_malformed():
    with pytest.raises(ValueError):
        parse_coloring("")
    with pytest.raises(ValueError):
        parse_coloring("3 2\n0 1 0\n0 2 1\n")            # missing a pair
    with pytest.raises(ValueError):
        parse_coloring("3 2\n0 1 0\n1 0 1\n1 2 0\n")     # pair colored twice
    with pytest.raises(ValueError):
        parse_coloring("3 2\n0 1 0\n0 2 5\n1 2 0\n")     # color out of range
    with pytest.raises(ValueError):
        parse_coloring("3 2\n0 1 0\n0 3 1\n1 2 0\n")     # invalid pair


# ---------------------------------------------------------------------------
# Targets.

def test_target_contains_fast_paths():
    assert target_contains(gr.cycle(3), clique_target(3))
    assert not target_contains(gr.path(5), clique_target(3))
    assert target_contains(gr.complete(4), clique_target(4))
    assert not target_contains(gr.cycle(9), clique_target(4))
    assert target_contains(gr.complete(1), clique_target(1))
    assert not target_contains(gr.empty(3), clique_target(2))


def test_path_subgraph_target():
    t = path_subgraph_target(4)
    assert target_contains(gr.path(4), t)
    assert not target_contains(gr.star(5), t)     # stars hold no P4 subgraph
    assert target_contains(gr.cycle(4), t)
    assert not target_contains(gr.path(3), t)


def test_minor_target_generic():
    t = minor_target(gr.complete_bipartite(2, 3))
    assert target_contains(gr.complete(5), t)
    assert not target_contains(gr.cycle(8), t)


# ---------------------------------------------------------------------------
# Exhaustive searches (frozen small Ramsey values).

def test_triangle_ramsey_is_five():
    t = clique_target(3)
    forced = exhaustive_check(5, 2, t)
    assert forced.outcome == ALL_FORCED
    assert forced.colorings_examined == 2 ** 9  # first edge fixed to color 0
    open_ = exhaustive_check(4, 2, t)
    assert open_.outcome == COUNTEREXAMPLE
    assert verify_lower_bound(open_.counterexample, t)


def test_double_p4_certifies_triangle_lower_bound():
    assert verify_lower_bound(ramsey.double_p4(), clique_target(3))


def test_exhaustive_check_guard_and_budget():
    with pytest.raises(ValueError):
        exhaustive_check(9, 2, clique_target(4))          # C(9,2) > 28
    res = exhaustive_check(6, 2, clique_target(4), budget=10)
    assert res.outcome == INDETERMINATE


def test_path_ramsey_value():
    # Every 2-coloring of K5 has a monochromatic P4 subgraph; K4 does not.
    t = path_subgraph_target(4)
    assert exhaustive_check(5, 2, t).outcome == ALL_FORCED
    assert exhaustive_check(4, 2, t).outcome == COUNTEREXAMPLE


# ---------------------------------------------------------------------------
# Constructions.

def test_two_cliques_structure():
    c = ramsey.two_cliques(5)
    assert c.n == 7
    red = color_class(c, 0)
    comps = sorted(gr.connected_components(red), key=len)
    assert [len(x) for x in comps] == [3, 4]
    assert verify_lower_bound(c, clique_target(5))
    with pytest.raises(ValueError):
        ramsey.two_cliques(2)


def test_c6_triangle_classes_are_k4_minor_free():
    c = ramsey.c6_triangle()
    assert minors.is_k4_minor_free(color_class(c, 0))
    assert minors.is_k4_minor_free(color_class(c, 1))
    assert verify_lower_bound(c, clique_target(4))


@pytest.mark.parametrize("ell", [1, 2, 3, 4, 5, 6])
def test_walecki_classes_are_hamiltonian_paths(ell):
    c = walecki(ell)
    n = 2 * ell
    assert c.n == n and c.ell == ell
    for j in range(ell):
        cls = color_class(c, j)
        assert cls.m == n - 1
        assert gr.is_forest(cls) and gr.is_connected(cls)
        assert gr.max_degree(cls) <= 2  # spanning tree of max degree 2 = path
    assert verify_lower_bound(c, clique_target(3))


def test_construct_dispatch():
    assert ramsey.construct("double_p4") == ramsey.double_p4()
    assert ramsey.construct("walecki", 2) == walecki(2)
    with pytest.raises(ValueError):
        ramsey.construct("unknown")


# ---------------------------------------------------------------------------
# Pigeonhole upper bounds.

def test_pigeonhole_triangle_matches_exact_value():
    for ell in range(1, 7):
        assert pigeonhole_upper_bound(3, ell) == 2 * ell + 1


def test_pigeonhole_k4_two_colors():
    assert pigeonhole_upper_bound(4, 2) == 8  # one above the exact value 7


def test_pigeonhole_is_a_valid_upper_bound_for_k4():
    # the exact engine shows forcing already at n = 7 <= 8
    assert exhaustive_check(7, 2, clique_target(4)).outcome == ALL_FORCED


def test_pigeonhole_rejects_bad_arguments():
    with pytest.raises(ValueError):
        pigeonhole_upper_bound(2, 1)
    with pytest.raises(ValueError):
        pigeonhole_upper_bound(3, 0)


# ---------------------------------------------------------------------------
# Proof-guided finder.

def test_finder_on_monochromatic_coloring():
    red = gr.complete(10)
    witness = proof_guided_finder(coloring_from_red(red), gr.complete(5))
    assert witness is not None and witness.color == 0
    assert minors.verify_minor_model(red, witness.model)


def test_finder_none_below_the_threshold():
    # two_cliques(5) certifies that no class has a K5 minor
    assert proof_guided_finder(ramsey.two_cliques(5), gr.complete(5)) is None


def test_finder_uses_minority_class_across_a_cut():
    # red = two far-apart cliques joined by one edge: the majority class has
    # a small cut, and the blue cross pairs host the target bipartitely
    red = gr.disjoint_union(gr.complete(6), gr.complete(6))
    masks = list(red.adj)
    masks[0] |= 1 << 6
    masks[6] |= 1 << 0
    red = gr.Graph(12, tuple(masks))
    c = coloring_from_red(red)
    witness = proof_guided_finder(c, gr.complete(5), epsilon_prime=0.3)
    assert witness is not None
    cls = color_class(c, witness.color)
    assert minors.verify_minor_model(cls, witness.model)


def test_finder_input_validation():
    c = walecki(3)
    with pytest.raises(ValueError):
        proof_guided_finder(c, gr.complete(3))  # 3 colors unsupported
    c2 = ramsey.double_p4()
    with pytest.raises(ValueError):
        proof_guided_finder(c2, gr.complete(3), epsilon_prime=0.9)
