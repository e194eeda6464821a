"""Vertex-weighting optimization for k-vertex graphs.

For a graph F on k vertices, minimize the mean of non-negative vertex
weights w subject to sum over edges uv of k^(-w(u)w(v)) <= k.  The solver
is multi-start projected gradient on a quadratic-penalty objective; every
reported value is a certified upper bound (feasibility is re-verified, and
near-misses are repaired by scaling the weights up).  A brute-force grid
oracle covers tiny graphs as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .rng import SplitMix64


@dataclass(frozen=True)
class GammaResult:
    value: float          # mean weight at the returned point
    weights: tuple[float, ...]
    constraint_slack: float  # k minus the constraint value (>= 0 when feasible)
    method: str           # "solver" | "uniform" | "grid_oracle"
    warnings: tuple[str, ...] = ()


@dataclass
class SolverConfig:
    restarts: int = 16
    iterations: int = 2000
    penalties: tuple[float, ...] = (10.0, 1e3, 1e5)
    seed: int = 0
    coarse_grid: bool = True  # extra coarse-grid start for k <= 6


def _edge_arrays(f: Graph) -> tuple[np.ndarray, np.ndarray]:
    pairs = list(f.edges())
    us = np.array([u for u, _ in pairs], dtype=np.intp)
    vs = np.array([v for _, v in pairs], dtype=np.intp)
    return us, vs


def constraint_value(f: Graph, w) -> float:
    """Sum over edges uv of k^(-w(u)w(v)); 0 when k < 2 or F has no edges."""
    k = f.n
    w = np.asarray(w, dtype=float)
    if k < 2 or f.m == 0:
        return 0.0
    us, vs = _edge_arrays(f)
    return float(np.sum(np.power(float(k), -(w[us] * w[vs]))))


def constraint_gradient(f: Graph, w) -> np.ndarray:
    """Analytic gradient of constraint_value.

    d/dw(u) of k^(-w(u)w(v)) = -w(v) ln(k) k^(-w(u)w(v)).
    """
    k = f.n
    w = np.asarray(w, dtype=float)
    grad = np.zeros(k)
    if k < 2 or f.m == 0:
        return grad
    us, vs = _edge_arrays(f)
    terms = np.power(float(k), -(w[us] * w[vs]))
    lnk = math.log(k)
    np.add.at(grad, us, -w[vs] * lnk * terms)
    np.add.at(grad, vs, -w[us] * lnk * terms)
    return grad


def is_feasible(f: Graph, w) -> bool:
    """Constraint value <= k; ties count as feasible."""
    return constraint_value(f, w) <= f.n


def _result(f: Graph, w: np.ndarray, method: str, warnings=()) -> GammaResult:
    w = np.maximum(w, 0.0)
    return GammaResult(
        value=float(np.mean(w)) if f.n else 0.0,
        weights=tuple(float(x) for x in w),
        constraint_slack=f.n - constraint_value(f, w),
        method=method,
        warnings=tuple(warnings),
    )


def gamma_uniform(f: Graph) -> GammaResult:
    """Best uniform weight: 0 when m <= k, else sqrt(log_k(m/k)) which makes
    the constraint hold with equality."""
    k, m = f.n, f.m
    if k == 0:
        return GammaResult(0.0, (), 0.0, "uniform")
    if m <= k:
        return _result(f, np.zeros(k), "uniform")
    w0 = math.sqrt(math.log(m / k, k))
    # the constraint holds with equality at w0; nudge up past any rounding
    while not is_feasible(f, np.full(k, w0)):
        w0 = math.nextafter(w0, math.inf)
    return _result(f, np.full(k, w0), "uniform")


def gamma_solve(f: Graph, config: SolverConfig | None = None) -> GammaResult:
    """Multi-start projected gradient on mean weight with a quadratic
    penalty on constraint violation.  Always returns a feasible point, never
    worse than the uniform solution."""
    config = config or SolverConfig()
    k, m = f.n, f.m
    if k == 0:
        return GammaResult(0.0, (), 0.0, "solver")
    if m <= k:
        return _result(f, np.zeros(k), "solver")

    edges = list(f.edges())
    lnk = math.log(k)
    exp = math.exp

    def cval(w):
        return sum(exp(-w[u] * w[v] * lnk) for u, v in edges)

    def penalty(w, mu):
        viol = cval(w) - k
        p = sum(w) / k
        return p + mu * viol * viol if viol > 0 else p

    def penalty_grad(w, mu):
        grad = [1.0 / k] * k
        viol = cval(w) - k
        if viol > 0:
            for u, v in edges:
                term = 2 * mu * viol * lnk * exp(-w[u] * w[v] * lnk)
                grad[u] -= w[v] * term
                grad[v] -= w[u] * term
        return grad

    uniform = np.asarray(gamma_uniform(f).weights)
    degrees = np.array([f.degree(v) for v in range(k)], dtype=float)

    starts = [uniform.copy()]
    if degrees.max() > 0:
        dw = degrees / degrees.mean()
        scaled = _rescale_feasible(f, dw * float(uniform[0]))
        if scaled is not None:
            starts.append(scaled)
    if config.coarse_grid and k <= 6:
        coarse = gamma_grid_oracle(f, resolution=0.25,
                                   w_max=max(1.0, 2 * float(uniform[0])))
        starts.append(np.asarray(coarse.weights))
    rng = SplitMix64(config.seed)
    while len(starts) < config.restarts:
        base = uniform * (0.5 + rng.uniform())
        jitter = np.array([rng.uniform() - 0.5 for _ in range(k)])
        starts.append(np.maximum(base + 0.5 * jitter, 0.0))

    best = uniform
    best_val = float(np.mean(uniform))
    warnings: list[str] = []
    for w0 in starts:
        w = [max(float(x), 0.0) for x in w0]
        for mu in config.penalties:
            w = _projected_gradient(w, lambda x: penalty(x, mu),
                                    lambda x: penalty_grad(x, mu),
                                    config.iterations // len(config.penalties))
        repaired = _rescale_feasible(f, np.asarray(w))
        if repaired is None:
            continue
        val = float(np.mean(repaired))
        if val < best_val - 1e-15:
            best_val = val
            best = repaired
    if not is_feasible(f, best):  # pragma: no cover - uniform start is feasible
        raise RuntimeError("no feasible point found")
    return _result(f, np.asarray(best), "solver", warnings)


def _projected_gradient(w: list[float], fval, fgrad, iters: int) -> list[float]:
    """Gradient descent with projection onto the non-negative orthant and a
    halving backtracking line search from step 1.0."""
    cur = fval(w)
    for _ in range(iters):
        g = fgrad(w)
        step = 1.0
        gain = 0.0
        while step > 1e-12:
            cand = [max(x - step * gi, 0.0) for x, gi in zip(w, g)]
            cv = fval(cand)
            if cv < cur - 1e-15:
                gain = cur - cv
                w, cur = cand, cv
                break
            step *= 0.5
        if gain < 1e-10:
            break
    return w


def _rescale_feasible(f: Graph, w: np.ndarray, max_doublings: int = 40) -> np.ndarray | None:
    """Scale weights up by the minimal factor restoring feasibility.

    Scaling by c >= 1 can only shrink every constraint term, except terms
    with a zero weight product, which scaling cannot fix; those points are
    rejected (None).
    """
    w = np.maximum(np.asarray(w, dtype=float), 0.0)
    if is_feasible(f, w):
        return w
    hi = 1.0
    for _ in range(max_doublings):
        hi *= 2.0
        if is_feasible(f, hi * w):
            break
    else:
        return None
    lo = 1.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if is_feasible(f, mid * w):
            hi = mid
        else:
            lo = mid
    return hi * w


def gamma_grid_oracle(f: Graph, resolution: float, w_max: float,
                      max_points: int = 200_000_000) -> GammaResult:
    """Exhaustive minimum over the grid {0, res, 2*res, ...}^k of feasible
    points.  An upper bound on the true optimum, accurate to O(resolution)
    by Lipschitz continuity of the constraint in each coordinate."""
    k = f.n
    if k == 0:
        return GammaResult(0.0, (), 0.0, "grid_oracle")
    if k > 6:
        raise ValueError("grid oracle limited to graphs with at most 6 vertices")
    axis = np.arange(0.0, w_max + resolution / 2, resolution)
    npoints = len(axis) ** k
    if npoints > max_points:
        raise ValueError(f"grid of {npoints} points refused (cap {max_points})")
    if f.m <= k:
        return _result(f, np.zeros(k), "grid_oracle")

    us, vs = _edge_arrays(f)
    # vectorize over coordinates 1..k-1, loop over the first coordinate
    rest = np.stack([g.ravel() for g in
                     np.meshgrid(*([axis] * (k - 1)), indexing="ij")])
    best_val = math.inf
    best_w = None
    base = float(k)
    for w0 in axis:
        weights = np.vstack([np.full(rest.shape[1], w0), rest])  # (k, P)
        cons = np.sum(np.power(base, -(weights[us] * weights[vs])), axis=0)
        feas = cons <= k
        if not feas.any():
            continue
        means = weights.mean(axis=0)
        means[~feas] = np.inf
        idx = int(np.argmin(means))
        if means[idx] < best_val:
            best_val = float(means[idx])
            best_w = weights[:, idx].copy()
    if best_w is None:
        raise RuntimeError("no feasible grid point; enlarge w_max")
    return _result(f, best_w, "grid_oracle")
