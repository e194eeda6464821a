"""Edge colorings of complete graphs, exhaustive small-case searches,
explicit lower-bound constructions, and the proof-guided monochromatic
minor finder.

Enumeration order: colorings are read as base-ell integers over the edges
of K_n sorted lexicographically, most significant digit first; the first
edge is fixed to color 0 (color-swap symmetry).  Subtrees in which some
color class already contains the target are skipped wholesale, since
adding edges never destroys a minor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import graph as gr
from . import minors
from .graph import Graph, bits
from .minors import MinorModel, find_minor, FOUND, ABSENT


def edge_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@dataclass(frozen=True)
class EdgeColoring:
    """Every pair of distinct vertices gets exactly one of ell colors;
    colors are indexed by the lexicographic edge order of edge_pairs."""

    n: int
    ell: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("need at least one color")
        if len(self.colors) != self.n * (self.n - 1) // 2:
            raise ValueError("color count does not match C(n, 2)")
        if any(not 0 <= c < self.ell for c in self.colors):
            raise ValueError("color out of range")


def color_class(c: EdgeColoring, i: int) -> Graph:
    """Spanning graph on n vertices whose edges are the pairs colored i."""
    if not 0 <= i < c.ell:
        raise ValueError(f"color {i} out of range")
    pairs = edge_pairs(c.n)
    return gr.from_edge_list(
        c.n, [pairs[e] for e, col in enumerate(c.colors) if col == i])


def coloring_from_red(red: Graph) -> EdgeColoring:
    """2-coloring with class 0 = `red` and class 1 = its complement."""
    colors = tuple(0 if red.has_edge(u, v) else 1 for u, v in edge_pairs(red.n))
    return EdgeColoring(red.n, 2, colors)


# Coloring file format: first line "n ell", then C(n,2) lines "u v c"
# covering each pair exactly once; '#' starts a comment.

def parse_coloring(text: str) -> EdgeColoring:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty coloring input")
    n, ell = (int(x) for x in rows[0].split())
    pairs = edge_pairs(n)
    index = {p: e for e, p in enumerate(pairs)}
    colors: list[int | None] = [None] * len(pairs)
    if len(rows) - 1 != len(pairs):
        raise ValueError(f"expected {len(pairs)} edge lines, found {len(rows) - 1}")
    for row in rows[1:]:
        u, v, c = (int(x) for x in row.split())
        key = (min(u, v), max(u, v))
        if key not in index:
            raise ValueError(f"pair ({u},{v}) invalid")
        e = index[key]
        if colors[e] is not None:
            raise ValueError(f"pair ({u},{v}) colored twice")
        colors[e] = c
    return EdgeColoring(n, ell, tuple(colors))  # range check in __post_init__


def write_coloring(c: EdgeColoring) -> str:
    lines = [f"{c.n} {c.ell}"]
    for (u, v), col in zip(edge_pairs(c.n), c.colors):
        lines.append(f"{u} {v} {col}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Targets.

@dataclass(frozen=True)
class Target:
    """What a color class must contain: a minor or a path subgraph."""

    name: str
    kind: str           # "minor" | "path_subgraph"
    graph: Graph | None  # the minor target; None for path subgraphs
    path_len: int = 0   # vertices of the required path subgraph


def clique_target(k: int) -> Target:
    return Target(f"K{k}-minor", "minor", gr.complete(k))


def minor_target(f: Graph) -> Target:
    return Target(f"minor({f.n}v,{f.m}e)", "minor", f)


def path_subgraph_target(k: int) -> Target:
    return Target(f"P{k}-subgraph", "path_subgraph", None, k)


def target_contains(g: Graph, target: Target, budget: int = minors.DEFAULT_BUDGET) -> bool:
    """Exact containment check, with fast paths for K3 (cycle) and K4
    (series-parallel) minors."""
    if target.kind == "path_subgraph":
        return _has_path_subgraph(g, target.path_len)
    tg = target.graph
    k = tg.n
    if tg.m == k * (k - 1) // 2:  # clique target
        if k <= 1:
            return g.n >= k
        if k == 2:
            return g.m >= 1
        if k == 3:
            return not minors.is_k3_minor_free(g)
        if k == 4:
            return not minors.is_k4_minor_free(g)
    res = find_minor(g, tg, budget)
    if res.status == FOUND:
        return True
    if res.status == ABSENT:
        return False
    raise RuntimeError(f"minor search budget exhausted after {res.nodes} nodes")


def _has_path_subgraph(g: Graph, k: int) -> bool:
    """Path on k vertices as a subgraph, by depth-first extension."""
    if k <= 0:
        return True
    if k == 1:
        return g.n >= 1

    def extend(v: int, visited: int, length: int) -> bool:
        if length == k:
            return True
        for u in bits(g.adj[v] & ~visited):
            if extend(u, visited | (1 << u), length + 1):
                return True
        return False

    return any(extend(v, 1 << v, 1) for v in range(g.n))


# ---------------------------------------------------------------------------
# Exhaustive verdicts.

ALL_FORCED = "all_colorings_forced"
COUNTEREXAMPLE = "counterexample"
INDETERMINATE = "indeterminate"


@dataclass
class RamseyVerdict:
    n: int
    ell: int
    target: str
    outcome: str
    counterexample: EdgeColoring | None
    colorings_examined: int


class _EnumBudget(Exception):
    pass


def _unsafe_graph(n: int, masks: list[int]) -> Graph:
    g = Graph.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(masks))
    return g


def exhaustive_check(n: int, ell: int, target: Target,
                     budget: int | None = None) -> RamseyVerdict:
    """Decide whether every ell-coloring of E(K_n) has a monochromatic
    target.  The first edge is fixed to color 0; colorings_examined counts
    colorings of the reduced space (ell^(E-1) total), including pruned ones.

    Without an explicit budget only ell=2 with C(n,2) <= 28 is accepted.
    """
    pairs = edge_pairs(n)
    E = len(pairs)
    if budget is None and not (ell == 2 and E <= 28):
        raise ValueError("search too large; pass an explicit budget to override")

    masks = [[0] * n for _ in range(ell)]
    assignment: list[int] = []
    examined = 0
    nodes = 0

    def class_has(c: int) -> bool:
        return target_contains(_unsafe_graph(n, masks[c]), target)

    def dfs(i: int, has: list[bool]):
        nonlocal examined, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _EnumBudget
        if any(has):
            examined += ell ** (E - i)
            return None
        if i == E:
            examined += 1
            return list(assignment)
        u, v = pairs[i]
        for c in range(1 if i == 0 else ell):
            masks[c][u] |= 1 << v
            masks[c][v] |= 1 << u
            assignment.append(c)
            new_has = has.copy()
            new_has[c] = class_has(c)
            res = dfs(i + 1, new_has)
            assignment.pop()
            masks[c][u] &= ~(1 << v)
            masks[c][v] &= ~(1 << u)
            if res is not None:
                return res
        return None

    try:
        res = dfs(0, [False] * ell)
    except _EnumBudget:
        return RamseyVerdict(n, ell, target.name, INDETERMINATE, None, examined)
    if res is None:
        return RamseyVerdict(n, ell, target.name, ALL_FORCED, None, examined)
    cex = EdgeColoring(n, ell, tuple(res))
    # independent re-check of the counterexample, outside the enumerator
    assert verify_lower_bound(cex, target)
    return RamseyVerdict(n, ell, target.name, COUNTEREXAMPLE, cex, examined)


def verify_lower_bound(c: EdgeColoring, target: Target,
                       budget: int = minors.DEFAULT_BUDGET) -> bool:
    """True iff no color class contains the target: the coloring certifies
    that the Ramsey number exceeds its n."""
    return not any(target_contains(color_class(c, i), target, budget)
                   for i in range(c.ell))


# ---------------------------------------------------------------------------
# Explicit constructions.

def two_cliques(k: int) -> EdgeColoring:
    """n = 2k-3: red = disjoint K_{k-1} and K_{k-2}, blue = the complete
    bipartite graph between them.  Certifies 2k-2 <= R_h(k)."""
    if k < 3:
        raise ValueError("needs k >= 3")
    red = gr.disjoint_union(gr.complete(k - 1), gr.complete(k - 2))
    return coloring_from_red(red)


def c6_triangle() -> EdgeColoring:
    """n = 6: red = 6-cycle plus the triangle on vertices 0, 2, 4; blue =
    complement.  Both classes are K4-minor-free."""
    red = gr.from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
                                (0, 2), (2, 4), (0, 4)])
    return coloring_from_red(red)


def double_p4() -> EdgeColoring:
    """n = 4, both classes paths on 4 vertices: no monochromatic cycle."""
    red = gr.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    return coloring_from_red(red)


def walecki(ell: int) -> EdgeColoring:
    """Decomposition of K_{2*ell} into ell Hamiltonian paths (zigzag
    construction), one color per path."""
    if ell < 1:
        raise ValueError("needs ell >= 1")
    n = 2 * ell
    pairs = edge_pairs(n)
    index = {p: e for e, p in enumerate(pairs)}
    colors: list[int | None] = [None] * len(pairs)
    for j in range(ell):
        seq = [j]
        for t in range(1, ell + 1):
            seq.append((j + t) % n)
            if t < ell:
                seq.append((j - t) % n)
        for a, b in zip(seq, seq[1:]):
            key = (min(a, b), max(a, b))
            if colors[index[key]] is not None:
                raise AssertionError("zigzag paths are not edge-disjoint")
            colors[index[key]] = j
    assert all(c is not None for c in colors)
    return EdgeColoring(n, ell, tuple(colors))


CONSTRUCTIONS = {
    "two_cliques": two_cliques,
    "c6_triangle": c6_triangle,
    "double_p4": double_p4,
    "walecki": walecki,
}


def construct(kind: str, *params) -> EdgeColoring:
    try:
        ctor = CONSTRUCTIONS[kind]
    except KeyError:
        raise ValueError(f"unknown construction {kind!r}") from None
    return ctor(*params)


# ---------------------------------------------------------------------------
# Pigeonhole upper bound from certified extremal edge counts.

def _edges_without_clique_minor(k: int, n: int) -> int:
    """Certified upper bound on edges of an n-vertex graph with no
    K_k-minor: n-1 (forests) for k=3, 2n-3 for k=4, and the
    8(k-2)*floor(log2(k-2))*n bound for k >= 5."""
    if n <= 1:
        return 0
    if k == 3:
        return n - 1
    if k == 4:
        return max(1, 2 * n - 3)
    return 8 * (k - 2) * int(math.floor(math.log2(k - 2))) * n


def pigeonhole_upper_bound(k: int, ell: int) -> int:
    """Smallest n with C(n,2) > ell * e_max(k, n): some class then has too
    many edges to avoid a K_k-minor, so R_h(k; ell) <= n."""
    if k < 3 or ell < 1:
        raise ValueError("needs k >= 3 and ell >= 1")
    n = 2
    while True:
        if n * (n - 1) // 2 > ell * _edges_without_clique_minor(k, n):
            return n
        n += 1


# ---------------------------------------------------------------------------
# Proof-guided monochromatic minor finder.

@dataclass
class MonoWitness:
    color: int
    model: MinorModel


def proof_guided_finder(c: EdgeColoring, target_graph: Graph,
                        epsilon_prime: float = 0.05,
                        budget: int = minors.DEFAULT_BUDGET) -> MonoWitness | None:
    """Search a 2-coloring for a monochromatic minor of `target_graph`,
    following the majority-class / core / cut dichotomy:

    1. G := majority color class;
    2. H := ceil(eps' * n)-core of G;
    3. if a minimum vertex cut of H splits it into sides both of size
       >= |V(target)|, all cross pairs are the minority color, so the
       minority class holds a complete bipartite subgraph hosting the
       target via pairwise contraction;
    4. otherwise search H exactly.

    None is a legitimate outcome; the guarantee behind the recipe is
    asymptotic.
    """
    if c.ell != 2:
        raise ValueError("finder handles 2-colorings only")
    if not 0 < epsilon_prime < 0.5:
        raise ValueError("epsilon_prime must lie in (0, 1/2)")
    classes = [color_class(c, 0), color_class(c, 1)]
    majority = 0 if classes[0].m >= classes[1].m else 1
    minority = 1 - majority
    g = classes[majority]
    core, survivors = gr.core_extract(g, math.ceil(epsilon_prime * c.n))
    new_to_old = sorted(survivors)
    k = target_graph.n

    sides = _cut_sides(core, k)
    if sides is not None:
        side_a = [new_to_old[v] for v in sides[0]]
        side_b = [new_to_old[v] for v in sides[1]]
        sets = tuple(frozenset([side_a[i], side_b[i]]) for i in range(k))
        model = MinorModel(target_graph, sets)
        if minors.verify_minor_model(classes[minority], model):
            return MonoWitness(minority, model)

    res = find_minor(core, target_graph, budget)
    if res.status == FOUND:
        sets = tuple(frozenset(new_to_old[v] for v in bs)
                     for bs in res.model.branch_sets)
        model = MinorModel(target_graph, sets)
        assert minors.verify_minor_model(classes[majority], model)
        return MonoWitness(majority, model)
    if res.status == ABSENT:
        return None
    raise RuntimeError(f"minor search budget exhausted after {res.nodes} nodes")


def _cut_sides(core: Graph, k: int) -> tuple[list[int], list[int]] | None:
    """Sides (each of size >= k, core numbering) left by a minimum vertex
    cut, or None when no such split exists."""
    if core.n < 2 * k or k == 0:
        return None
    cut = gr.minimum_vertex_cut(core)
    if cut is None:
        return None
    remaining = [v for v in range(core.n) if v not in cut]
    sub = gr.induced_subgraph(core, remaining)
    comps = gr.connected_components(sub)
    if len(comps) < 2:
        return None
    comp_lists = [sorted(remaining[v] for v in comp) for comp in comps]
    # group components into two sides, each needing >= k vertices
    if len(comp_lists) > 20:
        return None
    for pick in range(1, 1 << (len(comp_lists) - 1)):
        a = [v for i, comp in enumerate(comp_lists) if pick >> i & 1 for v in comp]
        b = [v for i, comp in enumerate(comp_lists) if not pick >> i & 1 for v in comp]
        if len(a) >= k and len(b) >= k:
            return a, b
    return None
