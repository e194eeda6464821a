"""Frozen correctness criteria as a runnable registry.

Each criterion is an independent check with its tolerance pinned here; the
`repro` CLI subcommand and tests/test_acceptance.py both consume this
registry.  Several checks compare the production code paths against
independent oracles (brute-force partition enumeration, finite differences,
closed forms) implemented in this module.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import asymptotics, catalog, gamma, minors, ramsey
from . import graph as gr
from .graph import Graph
from .rng import SplitMix64, derive_seed

ACCEPTANCE_SEED = 20260823


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: str
    seconds: float


# ---------------------------------------------------------------------------
# Independent oracles.

def brute_force_has_minor(host: Graph, target: Graph) -> bool:
    """Enumerate assignments of host vertices to the target's branch sets
    (or to none) and accept iff some assignment gives disjoint non-empty
    connected sets with all required cross edges."""
    k = target.n
    if k == 0:
        return True
    if k > host.n:
        return False
    tedges = list(target.edges())
    masks = [0] * k

    def ok() -> bool:
        if any(m == 0 for m in masks):
            return False
        if any(not minors._mask_connected(host.adj, m) for m in masks):
            return False
        return all(minors._masks_adjacent(host.adj, masks[u], masks[v])
                   for u, v in tedges)

    def rec(v: int) -> bool:
        if host.n - v < sum(1 for m in masks if m == 0):
            return False
        if v == host.n:
            return ok()
        for b in range(k):
            masks[b] |= 1 << v
            if rec(v + 1):
                return True
            masks[b] &= ~(1 << v)
        return rec(v + 1)  # leave v unused

    return rec(0)


def finite_difference_gradient(f: Graph, w: np.ndarray, h: float = 1e-6) -> np.ndarray:
    out = np.zeros(len(w))
    for i in range(len(w)):
        wp, wm = w.copy(), w.copy()
        wp[i] += h
        wm[i] -= h
        out[i] = (gamma.constraint_value(f, wp) - gamma.constraint_value(f, wm)) / (2 * h)
    return out


# ---------------------------------------------------------------------------
# Criteria.

def c01_small_triangle_ramsey() -> tuple[bool, str]:
    t = ramsey.clique_target(3)
    forced = ramsey.exhaustive_check(5, 2, t)
    open_ = ramsey.exhaustive_check(4, 2, t)
    ok = (forced.outcome == ramsey.ALL_FORCED
          and open_.outcome == ramsey.COUNTEREXAMPLE
          and ramsey.verify_lower_bound(open_.counterexample, t))
    return ok, f"n=5 {forced.outcome}, n=4 {open_.outcome}"


def c02_small_k4_ramsey() -> tuple[bool, str]:
    t = ramsey.clique_target(4)
    forced = ramsey.exhaustive_check(7, 2, t)
    open_ = ramsey.exhaustive_check(6, 2, t)
    cons = ramsey.c6_triangle()
    ok = (forced.outcome == ramsey.ALL_FORCED
          and open_.outcome == ramsey.COUNTEREXAMPLE
          and ramsey.verify_lower_bound(open_.counterexample, t)
          and ramsey.verify_lower_bound(cons, t))
    return ok, (f"n=7 {forced.outcome} ({forced.colorings_examined} colorings), "
                f"n=6 {open_.outcome}, c6_triangle verified")


def c03_multicolor_triangle() -> tuple[bool, str]:
    t = ramsey.clique_target(3)
    details = []
    ok = True
    for ell in range(1, 7):
        ub = ramsey.pigeonhole_upper_bound(3, ell)
        lb_ok = ramsey.verify_lower_bound(ramsey.walecki(ell), t)
        ok &= ub == 2 * ell + 1 and lb_ok
        details.append(f"ell={ell}: ub={ub}, walecki {'ok' if lb_ok else 'FAIL'}")
    return ok, "; ".join(details)


def c04_two_cliques_lower_bound() -> tuple[bool, str]:
    details = []
    ok = True
    for k in (4, 5, 6):
        good = ramsey.verify_lower_bound(ramsey.two_cliques(k),
                                         ramsey.clique_target(k))
        ok &= good
        details.append(f"k={k}: {'ok' if good else 'FAIL'}")
    return ok, "; ".join(details)


def c05_k4_edge_bound() -> tuple[bool, str]:
    rng = SplitMix64(ACCEPTANCE_SEED)
    checked_sp = 0
    for i in range(10_000):
        n = 3 + rng.randrange(10)  # 3..12
        p = rng.uniform()
        g = gr.random_gnp(n, min(1, max(0, round(p, 6))), rng.next_u64())
        if minors.is_k4_minor_free(g):
            checked_sp += 1
            if g.m > 2 * n - 3:
                return False, f"edge bound violated at n={n}, m={g.m}"
    k4 = gr.complete(4)
    for g in catalog.graphs_up_to_order(7):
        fast = minors.is_k4_minor_free(g)
        generic = minors.find_minor(g, k4).status == minors.ABSENT
        if fast != generic:
            return False, f"disagreement on {gr.write_graph6(g)}"
    return True, (f"{checked_sp} series-parallel samples within 2n-3; "
                  "exhaustive agreement on all graphs up to 7 vertices")


def c06_constants() -> tuple[bool, str]:
    c = asymptotics.compute_constants()
    residual = abs(1 - c.lambda_ + 2 * c.lambda_ * math.log(c.lambda_))
    ok = (residual < 1e-12
          and abs(c.beta - 0.265656) < 1e-6
          and abs(c.pre_division - 0.3190863) < 1e-6)
    return ok, (f"lambda={c.lambda_:.12f} residual={residual:.2e} "
                f"beta={c.beta:.7f} pre={c.pre_division:.7f}")


def c07_gamma_solver() -> tuple[bool, str]:
    worst_low = worst_high = 0.0
    for f in catalog.graphs_up_to_order(5):
        solved = gamma.gamma_solve(f)
        if not gamma.is_feasible(f, solved.weights):
            return False, f"infeasible point on {gr.write_graph6(f)}"
        if f.m <= f.n and solved.value != 0.0:
            return False, f"m<=k graph with nonzero value {solved.value}"
        oracle = gamma.gamma_grid_oracle(f, resolution=0.1, w_max=2.0)
        diff = solved.value - oracle.value
        if not -0.12 <= diff <= 0.02:
            return False, (f"value {solved.value:.4f} vs oracle "
                           f"{oracle.value:.4f} on {gr.write_graph6(f)}")
        worst_low = min(worst_low, diff)
        worst_high = max(worst_high, diff)
    rng = SplitMix64(ACCEPTANCE_SEED)
    worst_rel = 0.0
    for i in range(100):
        f = gr.random_gnp(3 + rng.randrange(4), 0.6, rng.next_u64())
        if f.m == 0:
            continue
        w = np.array([2 * rng.uniform() for _ in range(f.n)])
        ana = gamma.constraint_gradient(f, w)
        num = finite_difference_gradient(f, w)
        scale = max(1.0, float(np.max(np.abs(num))))
        worst_rel = max(worst_rel, float(np.max(np.abs(ana - num))) / scale)
        if worst_rel > 1e-5:
            return False, f"gradient mismatch {worst_rel:.2e}"
    return True, (f"solver-oracle gap in [{worst_low:.3f}, {worst_high:.3f}], "
                  f"gradient rel err {worst_rel:.2e}")


def c08_minor_oracle_equivalence() -> tuple[bool, str]:
    hosts = catalog.graphs_up_to_order(6)
    targets = catalog.graphs_up_to_order(4)
    pairs = 0
    for host in hosts:
        for target in targets:
            engine = minors.find_minor(host, target)
            assert engine.status != minors.INDETERMINATE
            oracle = brute_force_has_minor(host, target)
            if (engine.status == minors.FOUND) != oracle:
                return False, (f"host {gr.write_graph6(host)} target "
                               f"{gr.write_graph6(target)}: engine "
                               f"{engine.status}, oracle {oracle}")
            pairs += 1
    return True, f"{pairs} host/target pairs agree with the partition oracle"


def c09_star_extraction() -> tuple[bool, str]:
    report = asymptotics.star_ramsey_experiment([20, 40], 0.2, 200,
                                                ACCEPTANCE_SEED)
    ok = True
    details = []
    for k, n, rate, _, verified in report.rows:
        successes = round(rate * 200)
        ok &= rate >= asymptotics.STAR_SUCCESS_FLOOR and verified == successes
        details.append(f"k={k}: rate={rate:.3f} verified={verified}/{successes}")
    return ok, "; ".join(details)


def c10_bce_trend() -> tuple[bool, str]:
    lo, hi = asymptotics.BCE_CALIBRATION_BAND
    details = []
    ok = True
    for j, n in enumerate((10, 12, 14)):
        exact_vals = []
        for t in range(50):
            g = gr.random_gnp(n, 0.5, derive_seed(ACCEPTANCE_SEED, j * 50 + t))
            exact = minors.hadwiger_number(g, mode="exact")
            assert exact.exact
            heur = minors.hadwiger_number(
                g, mode="heuristic", seed=derive_seed(ACCEPTANCE_SEED, t),
                restarts=8)
            if heur.value > exact.value:
                return False, f"heuristic {heur.value} exceeds exact {exact.value}"
            exact_vals.append(exact.value)
        ratio = (sum(exact_vals) / 50) / asymptotics.bce_curve(n, 0.5)
        ok &= lo <= ratio <= hi
        details.append(f"n={n}: ratio={ratio:.3f}")
    return ok, "; ".join(details) + f" (band [{lo}, {hi}])"


def c11_determinism() -> tuple[bool, str]:
    a = asymptotics.star_ramsey_experiment([12], 0.25, 50, ACCEPTANCE_SEED)
    b = asymptotics.star_ramsey_experiment([12], 0.25, 50, ACCEPTANCE_SEED)
    if a.to_csv() != b.to_csv():
        return False, "same-seed reports differ"
    c = asymptotics.bce_experiment([8], 0.5, 10, ACCEPTANCE_SEED, mode="exact")
    d = asymptotics.bce_experiment([8], 0.5, 10, ACCEPTANCE_SEED, mode="exact")
    if c.to_csv() != d.to_csv():
        return False, "same-seed reports differ"
    return True, "byte-identical reports under repeated seeded runs"


CRITERIA: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("01 triangle ramsey exact (n=5 forced, n=4 open)", c01_small_triangle_ramsey),
    ("02 k4 ramsey exact (n=7 forced, n=6 open)", c02_small_k4_ramsey),
    ("03 multicolor triangle = 2l+1 for l<=6", c03_multicolor_triangle),
    ("04 two-clique lower bound, k in {4,5,6}", c04_two_cliques_lower_bound),
    ("05 k4-minor-free edge bound + exhaustive agreement", c05_k4_edge_bound),
    ("06 reference constants", c06_constants),
    ("07 gamma solver vs grid oracle + gradient check", c07_gamma_solver),
    ("08 minor engine vs partition oracle", c08_minor_oracle_equivalence),
    ("09 star extraction success rate", c09_star_extraction),
    ("10 hadwiger trend vs reference curve", c10_bce_trend),
    ("11 determinism of seeded reports", c11_determinism),
]


def run_all(names: list[str] | None = None) -> list[CriterionResult]:
    results = []
    for name, fn in CRITERIA:
        if names and not any(s in name for s in names):
            continue
        start = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            passed, detail = False, f"error: {exc!r}"
        results.append(CriterionResult(name, passed, detail,
                                       time.perf_counter() - start))
    return results
