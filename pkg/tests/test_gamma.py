"""Vertex-weighting optimizer: closed forms, feasibility, oracle gaps."""

import math

import numpy as np
import pytest

from minor_ramsey import gamma
from minor_ramsey import graph as gr
from minor_ramsey.acceptance import finite_difference_gradient


def test_uniform_closed_form_cliques():
    # For K_k with m > k the binding uniform weight is sqrt(log_k(m/k)).
    k5 = gamma.gamma_uniform(gr.complete(5))
    assert k5.value == pytest.approx(math.sqrt(math.log(2) / math.log(5)), abs=1e-12)
    assert k5.value == pytest.approx(0.656260, abs=1e-6)
    k9 = gamma.gamma_uniform(gr.complete(9))
    assert k9.value == pytest.approx(math.sqrt(math.log(4) / math.log(9)), abs=1e-12)
    assert k9.value == pytest.approx(0.794311, abs=1e-6)


def test_sparse_graphs_cost_zero():
    for g in (gr.cycle(5), gr.path(6), gr.empty(4), gr.complete(3)):
        assert gamma.gamma_uniform(g).value == 0.0
        assert gamma.gamma_solve(g).value == 0.0


def test_constraint_value_uniform_cliques():
    # all C(k,2) terms equal k^(-w^2)
    w = [0.5] * 4
    expected = 6 * 4 ** -0.25
    assert gamma.constraint_value(gr.complete(4), w) == pytest.approx(expected)
    assert gamma.constraint_value(gr.empty(4), w) == 0.0


def test_gradient_matches_finite_differences():
    for s in range(20):
        f = gr.random_gnp(5, 0.7, 60 + s)
        if f.m == 0:
            continue
        w = np.abs(np.sin(np.arange(f.n) + s)) * 2
        ana = gamma.constraint_gradient(f, w)
        num = finite_difference_gradient(f, w)
        assert np.allclose(ana, num, rtol=1e-5, atol=1e-6)


def test_solver_feasible_and_never_worse_than_uniform():
    for g in (gr.complete(5), gr.complete(6), gr.complete_bipartite(3, 4),
              gr.complement(gr.cycle(7))):
        res = gamma.gamma_solve(g)
        assert gamma.is_feasible(g, res.weights)
        assert res.constraint_slack >= 0
        assert res.value <= gamma.gamma_uniform(g).value + 1e-12
        assert all(w >= 0 for w in res.weights)


def test_solver_vs_grid_oracle_on_named_graphs():
    for g in (gr.complete(5), gr.complete_bipartite(2, 3),
              gr.from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4),
                                    (1, 2), (2, 3), (3, 4)])):
        solved = gamma.gamma_solve(g)
        oracle = gamma.gamma_grid_oracle(g, resolution=0.1, w_max=2.0)
        assert solved.value <= oracle.value + 0.02
        assert solved.value >= oracle.value - 0.12


def test_solver_deterministic():
    g = gr.complete(5)
    a = gamma.gamma_solve(g, gamma.SolverConfig(seed=11))
    b = gamma.gamma_solve(g, gamma.SolverConfig(seed=11))
    assert a.weights == b.weights and a.value == b.value


def test_grid_oracle_limits():
    with pytest.raises(ValueError):
        gamma.gamma_grid_oracle(gr.complete(7), resolution=0.5, w_max=1.0)
    with pytest.raises(ValueError):
        gamma.gamma_grid_oracle(gr.complete(6), resolution=0.001, w_max=2.0)


def test_grid_oracle_sparse_is_zero():
    res = gamma.gamma_grid_oracle(gr.cycle(5), resolution=0.5, w_max=1.0)
    assert res.value == 0.0


def test_empty_graph():
    assert gamma.gamma_solve(gr.empty(0)).value == 0.0
    assert gamma.gamma_uniform(gr.empty(0)).value == 0.0
