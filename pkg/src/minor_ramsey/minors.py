"""Exact and heuristic minor containment.

The exact decision is a branch-and-bound over partial branch-set
assignments: target vertices are processed in descending degree, and for
each one the search enumerates connected host subsets (each exactly once,
by fixed minimum element) that touch the branch sets of all previously
placed neighbors.  Minor testing is NP-hard, so the search carries a node
budget and reports an explicit "indeterminate" outcome when it runs out;
it never guesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import graph as gr
from .graph import Graph, bits, popcount
from .rng import SplitMix64

DEFAULT_BUDGET = 10 ** 8

FOUND = "found"
ABSENT = "absent"
INDETERMINATE = "indeterminate"


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class MinorModel:
    """Branch-set witness: branch_sets[v] hosts target vertex v."""

    target: Graph
    branch_sets: tuple[frozenset[int], ...]


@dataclass
class MinorSearch:
    status: str  # FOUND / ABSENT / INDETERMINATE
    model: MinorModel | None
    nodes: int


@dataclass
class HadwigerResult:
    value: int
    witness: MinorModel
    exact: bool  # False: value is only a certified lower bound


def verify_minor_model(host: Graph, model: MinorModel) -> bool:
    """Independent check of the three branch-set invariants."""
    if len(model.branch_sets) != model.target.n:
        return False
    masks = []
    seen = 0
    for bs in model.branch_sets:
        mask = 0
        for v in bs:
            if not 0 <= v < host.n:
                return False
            mask |= 1 << v
        if not mask or mask & seen:
            return False  # empty or overlapping
        seen |= mask
        if not _mask_connected(host.adj, mask):
            return False
        masks.append(mask)
    for u, v in model.target.edges():
        if not _masks_adjacent(host.adj, masks[u], masks[v]):
            return False
    return True


def _mask_connected(adj, mask: int) -> bool:
    start = mask & -mask
    comp = start
    while True:
        grow = 0
        for v in bits(comp):
            grow |= adj[v]
        grow = (grow | comp) & mask
        if grow == comp:
            return comp == mask
        comp = grow


def _masks_adjacent(adj, a: int, b: int) -> bool:
    for v in bits(a):
        if adj[v] & b:
            return True
    return False


def _neighborhood(adj, mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= adj[v]
    return out & ~mask


def serialize_model(model: MinorModel) -> str:
    """One line per branch set: "i: v1 v2 ..." in host numbering."""
    lines = [f"{i}: " + " ".join(str(v) for v in sorted(bs))
             for i, bs in enumerate(model.branch_sets)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Exact containment.

def find_minor(host: Graph, target: Graph, budget: int = DEFAULT_BUDGET) -> MinorSearch:
    """Decide whether `target` is a minor of `host`.

    Returns FOUND with a verified model, ABSENT, or INDETERMINATE when the
    node budget runs out.
    """
    k = target.n
    if k == 0:
        return MinorSearch(FOUND, MinorModel(target, ()), 0)
    if k > host.n or target.m > host.m:
        return MinorSearch(ABSENT, None, 0)

    # relabel the host by descending degree so the search tries the most
    # connected vertices first
    perm = sorted(range(host.n), key=lambda v: (-host.degree(v), v))
    original_host = host
    host = gr.induced_subgraph(host, perm)

    order = sorted(range(k), key=lambda v: (-target.degree(v), v))
    pos = [0] * k
    for i, v in enumerate(order):
        pos[v] = i
    # earlier neighbors (by search position) each later branch set must touch
    earlier = [[pos[u] for u in target.neighbors(v) if pos[u] < i]
               for i, v in enumerate(order)]
    # all clique vertices are interchangeable: force branch-set minimum
    # vertices to increase, killing the k! symmetry
    clique_sym = target.m == k * (k - 1) // 2
    # pos_adj[i]: mask of search positions target-adjacent to position i
    pos_adj = [0] * k
    for i, v in enumerate(order):
        for u in target.neighbors(v):
            pos_adj[i] |= 1 << pos[u]
    adj = host.adj
    full = (1 << host.n) - 1
    all_pos = (1 << k) - 1
    counter = 0

    def rec(i: int, used: int, sets: list[int], nbrs: list[int], prev_min: int):
        if i == k:
            return list(sets)
        free = full & ~used
        need_after = k - i - 1
        reqs = [nbrs[j] for j in earlier[i]]
        for r in bits(free):
            if clique_sym and r <= prev_min:
                continue
            allowed = free & ~((1 << (r + 1)) - 1)  # only vertices > r may join
            res = grow(i, 1 << r, allowed, used, sets, nbrs, reqs,
                       need_after, popcount(free), r)
            if res is not None:
                return res
        return None

    def grow(i: int, cur: int, avail: int, used: int, sets, nbrs, reqs,
             need_after: int, free_count: int, root: int):
        nonlocal counter
        counter += 1
        if counter > budget:
            raise _BudgetExhausted
        if free_count - popcount(cur) < need_after:
            return None
        potential = cur | avail
        unmet = [R for R in reqs if not R & cur]
        for R in unmet:
            if not R & potential:
                return None
        if not unmet:
            curN = _neighborhood(adj, cur)
            # every assigned set must keep at least one free neighbor per
            # future target-neighbor (future branch sets are disjoint)
            free_after = full & ~(used | cur)
            future = all_pos & ~((1 << (i + 1)) - 1)
            feasible = True
            for j in range(i + 1):
                need = popcount(pos_adj[j] & future)
                nb_free = nbrs[j] & free_after if j < i else curN & free_after
                if popcount(nb_free) < need:
                    feasible = False
                    break
            if feasible:
                sets.append(cur)
                nbrs.append(curN)
                res = rec(i + 1, used | cur, sets, nbrs, root)
                sets.pop()
                nbrs.pop()
                if res is not None:
                    return res
        ext = _neighborhood(adj, cur) & avail
        local_avail = avail
        for v in bits(ext):
            res = grow(i, cur | (1 << v), local_avail & ~(1 << v), used, sets,
                       nbrs, reqs, need_after, free_count, root)
            if res is not None:
                return res
            local_avail &= ~(1 << v)
        return None

    # cheap shortcut: a clique of size k hosts any k-vertex target directly
    clique = greedy_clique(original_host)
    if popcount(clique) >= k:
        verts = list(bits(clique))[:k]
        model = MinorModel(target, tuple(frozenset([v]) for v in verts))
        if verify_minor_model(original_host, model):
            return MinorSearch(FOUND, model, 0)

    try:
        res = rec(0, 0, [], [], -1)
    except _BudgetExhausted:
        return MinorSearch(INDETERMINATE, None, counter)
    if res is None:
        return MinorSearch(ABSENT, None, counter)
    sets_in_order = [None] * k
    for i, mask in enumerate(res):
        sets_in_order[order[i]] = frozenset(perm[v] for v in bits(mask))
    model = MinorModel(target, tuple(sets_in_order))
    assert verify_minor_model(original_host, model)
    return MinorSearch(FOUND, model, counter)


def has_minor(host: Graph, target: Graph, budget: int = DEFAULT_BUDGET) -> MinorModel | None:
    """Convenience wrapper: model or None; raises on an exhausted budget."""
    res = find_minor(host, target, budget)
    if res.status == INDETERMINATE:
        raise RuntimeError(f"minor search budget exhausted after {res.nodes} nodes")
    return res.model


# ---------------------------------------------------------------------------
# Hadwiger number.

def greedy_clique(g: Graph, rng: SplitMix64 | None = None) -> int:
    """Mask of a maximal clique, grown greedily by degree (random
    tie-breaks when an rng is supplied)."""
    verts = sorted(range(g.n), key=lambda v: -g.degree(v))
    if rng is not None:
        verts = list(range(g.n))
        rng.shuffle(verts)
        verts.sort(key=lambda v: -g.degree(v))
    clique = 0
    for v in verts:
        if clique & ~g.adj[v] == 0:
            clique |= 1 << v
    return clique


def hadwiger_number(g: Graph, mode: str = "exact", seed: int = 0,
                    restarts: int = 32, budget: int = DEFAULT_BUDGET) -> HadwigerResult:
    if mode == "exact":
        return _hadwiger_exact(g, budget)
    if mode == "heuristic":
        return _hadwiger_heuristic(g, seed, restarts)
    raise ValueError(f"unknown mode {mode!r}")


def _singleton_model(k: int, verts: list[int]) -> MinorModel:
    return MinorModel(gr.complete(k), tuple(frozenset([v]) for v in verts[:k]))


def _hadwiger_exact(g: Graph, budget: int) -> HadwigerResult:
    if g.n == 0:
        return HadwigerResult(0, MinorModel(gr.complete(0), ()), True)
    clique = greedy_clique(g)
    h = popcount(clique)
    witness = _singleton_model(h, list(bits(clique)))
    while h < g.n:
        res = find_minor(g, gr.complete(h + 1), budget)
        if res.status == FOUND:
            h += 1
            witness = res.model
        elif res.status == ABSENT:
            return HadwigerResult(h, witness, True)
        else:
            return HadwigerResult(h, witness, False)
    return HadwigerResult(h, witness, True)


def _hadwiger_heuristic(g: Graph, seed: int, restarts: int) -> HadwigerResult:
    """Lower bound from repeated random greedy contraction runs: contract an
    edge maximizing the resulting minimum degree, tracking the largest clique
    seen along the way.  Never reported as exact."""
    best_h = 0
    best_witness = MinorModel(gr.complete(0), ())
    for r in range(restarts):
        rng = SplitMix64(seed).split(r)
        adj = list(g.adj)
        branch = [1 << v for v in range(g.n)]  # original vertices per node
        while True:
            n_cur = len(adj)
            cur = gr.Graph.__new__(gr.Graph)  # avoid re-validation in the hot loop
            object.__setattr__(cur, "n", n_cur)
            object.__setattr__(cur, "adj", tuple(adj))
            cl = greedy_clique(cur, rng)
            if popcount(cl) > best_h:
                best_h = popcount(cl)
                sets = tuple(frozenset(bits(branch[v])) for v in bits(cl))
                best_witness = MinorModel(gr.complete(best_h), sets)
            if n_cur <= 1 or all(popcount(a) == n_cur - 1 for a in adj):
                break
            # pick the contraction maximizing the resulting minimum degree
            best_score = None
            choices = []
            for u in range(n_cur):
                for v in bits(adj[u] >> (u + 1) << (u + 1)):
                    merged = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
                    score = popcount(merged)
                    for w in range(n_cur):
                        if w in (u, v):
                            continue
                        d = popcount(adj[w])
                        if adj[w] >> u & 1 and adj[w] >> v & 1:
                            d -= 1
                        elif adj[w] >> u & 1 or adj[w] >> v & 1:
                            pass
                        if d < score:
                            score = d
                    if best_score is None or score > best_score:
                        best_score = score
                        choices = [(u, v)]
                    elif score == best_score:
                        choices.append((u, v))
            if not choices:  # no edge left to contract
                break
            u, v = choices[rng.randrange(len(choices))]
            contracted = gr.contract_edge(cur, u, v)
            lo, hi = min(u, v), max(u, v)
            branch[lo] |= branch[hi]
            del branch[hi]
            adj = list(contracted.adj)
    return HadwigerResult(best_h, best_witness, False)


# ---------------------------------------------------------------------------
# Specialized minor-freeness tests.

def is_k3_minor_free(g: Graph) -> bool:
    """A graph has a K3-minor iff it has a cycle."""
    return gr.is_forest(g)


def is_k4_minor_free(g: Graph) -> bool:
    """Series-parallel reduction: delete degree<=1 vertices and suppress
    degree-2 vertices (merging parallels); K4-minor-free iff it empties."""
    adj = list(g.adj)
    alive = (1 << g.n) - 1
    progress = True
    while progress:
        progress = False
        for v in range(g.n):
            if not alive >> v & 1:
                continue
            nb = adj[v] & alive
            d = popcount(nb)
            if d <= 1:
                alive &= ~(1 << v)
                progress = True
            elif d == 2:
                a = (nb & -nb).bit_length() - 1
                b = (nb & (nb - 1)).bit_length() - 1
                alive &= ~(1 << v)
                adj[a] |= 1 << b
                adj[b] |= 1 << a
                progress = True
    return alive == 0


# ---------------------------------------------------------------------------
# Explicit small models.

def bipartite_clique_minor(a: int, b: int) -> MinorModel:
    """A K_min(a,b)-model inside complete_bipartite(a, b) by pairing side
    vertices: branch set i = {i, a+i}."""
    if a < 1 or b < 1:
        raise ValueError("both sides must be non-empty")
    t = min(a, b)
    sets = tuple(frozenset([i, a + i]) for i in range(t))
    return MinorModel(gr.complete(t), sets)


def embed_in_clique_model(target: Graph, clique_model: MinorModel) -> MinorModel:
    """Model of `target` from a K_k model with k >= |V(target)|: keep the
    first branch sets (every cross pair is already joined)."""
    if target.n > clique_model.target.n:
        raise ValueError("clique model too small for the target")
    return MinorModel(target, clique_model.branch_sets[:target.n])


# ---------------------------------------------------------------------------
# Randomized star-minor extraction from a 2-colored complete graph.

def star_minor_extract(g_red: Graph, g_blue: Graph, k: int,
                       epsilon: float = 0.2, trials: int = 200,
                       seed: int = 0) -> tuple[int, MinorModel] | None:
    """Find a monochromatic K_{1,k}-minor in a 2-coloring given as the
    complementary pair (g_red, g_blue).

    A vertex of degree >= k in either class yields a star subgraph at once.
    Otherwise sample ceil(epsilon*k) vertices with repetition, up to `trials`
    times, looking for a set dominating both classes; contracting it in a
    class where it induces a connected subgraph (at least one does, the
    classes being complementary) gives the star's center.
    """
    if g_blue != gr.complement(g_red):
        raise ValueError("inputs must be complementary graphs")
    n = g_red.n
    classes = (g_red, g_blue)
    target = gr.star(k)
    for color, cg in enumerate(classes):
        for v in range(n):
            if cg.degree(v) >= k:
                leaves = list(bits(cg.adj[v]))[:k]
                model = MinorModel(target, (frozenset([v]),)
                                   + tuple(frozenset([u]) for u in leaves))
                return color, model
    s = math.ceil(epsilon * k)
    if s < 1:
        raise ValueError("epsilon*k must round up to at least one sample")
    rng = SplitMix64(seed)
    for _ in range(trials):
        smask = 0
        for _ in range(s):
            smask |= 1 << rng.randrange(n)
        if n - popcount(smask) < k:
            continue
        if not all(_dominates(cg, smask) for cg in classes):
            continue
        for color, cg in enumerate(classes):
            if _mask_connected(cg.adj, smask):
                outside = [v for v in range(n) if not smask >> v & 1]
                leaves = outside[:k]
                model = MinorModel(target, (frozenset(bits(smask)),)
                                   + tuple(frozenset([u]) for u in leaves))
                if verify_minor_model(cg, model):
                    return color, model
    return None


def _dominates(g: Graph, smask: int) -> bool:
    for v in range(g.n):
        if smask >> v & 1:
            continue
        if not g.adj[v] & smask:
            return False
    return True
