"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency.

Adjacency is stored as one Python int per vertex (bit v of adj[u] set iff
uv is an edge), which keeps the minor search and coloring enumeration
bitwise.  Hosts are capped at MAX_VERTICES vertices; everything in this
package runs at desk scale.  All operations return new graphs; values are
safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .rng import SplitMix64

MAX_VERTICES = 64


class GraphConstructionError(ValueError):
    """Invalid parameters passed to a graph constructor."""


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of `mask`, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphConstructionError("negative vertex count")
        if self.n > MAX_VERTICES:
            raise GraphConstructionError(
                f"{self.n} vertices exceeds the cap of {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphConstructionError("adjacency length != n")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise GraphConstructionError(f"vertex {v}: neighbor out of range")
            if mask >> v & 1:
                raise GraphConstructionError(f"vertex {v}: self-loop")
        for v, mask in enumerate(self.adj):
            for u in bits(mask):
                if not self.adj[u] >> v & 1:
                    raise GraphConstructionError(f"asymmetric edge {v},{u}")

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class GraphDensity:
    p: Fraction
    q: Fraction

    def __post_init__(self):
        if self.p + self.q != 1:
            raise ValueError("p + q must equal 1")


def _graph_from_masks(n: int, masks: list[int]) -> Graph:
    return Graph(n, tuple(masks))


def _add_edge(masks: list[int], u: int, v: int) -> None:
    masks[u] |= 1 << v
    masks[v] |= 1 << u


# ---------------------------------------------------------------------------
# Constructors.  Canonical numbering: path/cycle vertices in traversal order,
# complete_bipartite sides 0..a-1 and a..a+b-1, star center = vertex 0.

def empty(n: int) -> Graph:
    if n < 0:
        raise GraphConstructionError("negative vertex count")
    return Graph(n, (0,) * n)


def complete(k: int) -> Graph:
    full = (1 << k) - 1
    return Graph(k, tuple(full ^ (1 << v) for v in range(k)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise GraphConstructionError("negative side size")
    side_a = (1 << a) - 1
    side_b = ((1 << b) - 1) << a
    masks = [side_b] * a + [side_a] * b
    return Graph(a + b, tuple(masks))


def path(k: int) -> Graph:
    if k < 0:
        raise GraphConstructionError("negative vertex count")
    masks = [0] * k
    for v in range(k - 1):
        _add_edge(masks, v, v + 1)
    return _graph_from_masks(k, masks)


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphConstructionError("cycle needs at least 3 vertices")
    masks = [0] * k
    for v in range(k):
        _add_edge(masks, v, (v + 1) % k)
    return _graph_from_masks(k, masks)


def star(k: int) -> Graph:
    """K_{1,k}: center is vertex 0, leaves 1..k."""
    if k < 0:
        raise GraphConstructionError("negative leaf count")
    masks = [((1 << (k + 1)) - 2)] + [1] * k
    return _graph_from_masks(k + 1, masks)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    masks = list(g1.adj) + [a << g1.n for a in g2.adj]
    return _graph_from_masks(g1.n + g2.n, masks)


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    masks = [0] * n
    if n < 0:
        raise GraphConstructionError("negative vertex count")
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"edge ({u},{v}) out of range")
        if u == v:
            raise GraphConstructionError(f"loop at vertex {u}")
        if masks[u] >> v & 1:
            raise GraphConstructionError(f"duplicate edge ({u},{v})")
        _add_edge(masks, u, v)
    return _graph_from_masks(n, masks)


_KINDS = {
    "empty": empty,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "path": path,
    "cycle": cycle,
    "star": star,
    "disjoint_union": disjoint_union,
    "from_edge_list": from_edge_list,
}


def make(kind: str, *params) -> Graph:
    """Dispatch constructor by family name."""
    try:
        ctor = _KINDS[kind]
    except KeyError:
        raise GraphConstructionError(f"unknown graph kind {kind!r}") from None
    return ctor(*params)


# ---------------------------------------------------------------------------
# Structural operations.

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ a) & ~(1 << v) for v, a in enumerate(g.adj)))


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Merge the endpoints of edge uv; the merged vertex sits at min(u, v).

    Vertices above max(u, v) shift down by one; the result is simple.
    """
    if not g.has_edge(u, v):
        raise GraphConstructionError(f"({u},{v}) is not an edge")
    lo, hi = min(u, v), max(u, v)
    merged = (g.adj[lo] | g.adj[hi]) & ~(1 << lo) & ~(1 << hi)
    masks = []
    for w in range(g.n):
        if w == hi:
            continue
        mask = merged if w == lo else g.adj[w]
        if w != lo and mask >> hi & 1:
            mask = (mask & ~(1 << hi)) | (1 << lo)
        # drop bit hi and close the gap
        low_part = mask & ((1 << hi) - 1)
        high_part = mask >> (hi + 1)
        masks.append(low_part | (high_part << hi))
    return _graph_from_masks(g.n - 1, masks)


def delete_vertices(g: Graph, remove: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the kept vertices, renumbered compactly.

    Returns (subgraph, new_to_old) where new_to_old[i] is the original index
    of the subgraph's vertex i (kept vertices in increasing original order).
    """
    remove_mask = 0
    for v in remove:
        if not 0 <= v < g.n:
            raise GraphConstructionError(f"vertex {v} out of range")
        remove_mask |= 1 << v
    keep = [v for v in range(g.n) if not remove_mask >> v & 1]
    return induced_subgraph(g, keep), tuple(keep)


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    """Induced subgraph on `vertices`, renumbered in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    masks = [0] * len(vertices)
    for i, v in enumerate(vertices):
        for u in bits(g.adj[v]):
            j = index.get(u)
            if j is not None:
                masks[i] |= 1 << j
    return _graph_from_masks(len(vertices), masks)


def core_extract(g: Graph, d: int) -> tuple[Graph, frozenset[int]]:
    """The d-core: maximal induced subgraph with min degree >= d.

    Returned graph is renumbered (survivors in increasing original order);
    the survivor set is in original numbering.  Possibly empty.  The result
    is the fixed point of peeling low-degree vertices, independent of order.
    """
    if d < 0:
        raise ValueError("core order must be non-negative")
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if alive >> v & 1 and popcount(g.adj[v] & alive) < d:
                alive &= ~(1 << v)
                changed = True
    survivors = [v for v in range(g.n) if alive >> v & 1]
    return induced_subgraph(g, survivors), frozenset(survivors)


# ---------------------------------------------------------------------------
# Basic queries.

def connected_components(g: Graph) -> list[frozenset[int]]:
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = g.adj[v]
        while frontier & ~comp:
            comp |= frontier
            nxt = 0
            for u in bits(frontier & ~seen):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
        comp |= frontier
        seen |= comp
        out.append(frozenset(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def min_degree(g: Graph) -> int:
    return min((g.degree(v) for v in range(g.n)), default=0)


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def edge_count(g: Graph) -> int:
    return g.m


def density(g: Graph) -> GraphDensity:
    """Edge density m / C(n, 2); needs at least 2 vertices."""
    if g.n < 2:
        raise ValueError("density undefined for graphs with fewer than 2 vertices")
    p = Fraction(g.m, g.n * (g.n - 1) // 2)
    return GraphDensity(p, 1 - p)


# ---------------------------------------------------------------------------
# Vertex connectivity, exact via unit-capacity max-flow (Menger).

def _max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> tuple[int, frozenset[int]]:
    """Max number of internally vertex-disjoint s-t paths and a minimum
    vertex cut separating s and t (s, t non-adjacent, s != t)."""
    # Split network: node 2v = v_in, 2v+1 = v_out; v_in->v_out has unit
    # capacity except at s and t.  Edges carry capacity n (effectively inf).
    n = g.n
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = big if v in (s, t) else 1
    for u, v in g.edges():
        cap[(2 * u + 1, 2 * v)] = big
        cap[(2 * v + 1, 2 * u)] = big
    succ: dict[int, set[int]] = {x: set() for x in range(2 * n)}
    for (a, b) in list(cap):
        succ[a].add(b)
        succ[b].add(a)  # residual arcs
        cap.setdefault((b, a), 0)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        # BFS for augmenting path
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for a in queue:
                for b in succ[a]:
                    if b not in parent and cap[(a, b)] > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    reach = {source}
    queue = [source]
    while queue:
        nxt = []
        for a in queue:
            for b in succ[a]:
                if b not in reach and cap[(a, b)] > 0:
                    reach.add(b)
                    nxt.append(b)
        queue = nxt
    cut = frozenset(v for v in range(n)
                    if 2 * v in reach and 2 * v + 1 not in reach)
    return flow, cut


def minimum_vertex_cut(g: Graph) -> frozenset[int] | None:
    """A minimum vertex cut, or None if g is complete (no cut exists)."""
    if g.n <= 1:
        return None
    comps = connected_components(g)
    if len(comps) > 1:
        return frozenset()
    best: frozenset[int] | None = None
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if g.has_edge(s, t):
                continue
            k, cut = _max_vertex_disjoint_paths(g, s, t)
            if best is None or k < len(best):
                best = cut
    return best


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; n-1 for complete graphs, 0 for n <= 1."""
    if g.n <= 1:
        return 0
    cut = minimum_vertex_cut(g)
    if cut is None:
        return g.n - 1
    return len(cut)


# ---------------------------------------------------------------------------
# graph6 encoding (size header N(n), then the upper-triangle bits in column
# order x01, x02, x12, x03, ..., packed big-endian 6 bits per char, offset 63).

def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + (n >> shift & 63)) for shift in (12, 6, 0))
    bitlist = []
    for v in range(1, n):
        for u in range(v):
            bitlist.append(1 if g.has_edge(u, v) else 0)
    while len(bitlist) % 6:
        bitlist.append(0)
    chars = []
    for i in range(0, len(bitlist), 6):
        value = 0
        for b in bitlist[i:i + 6]:
            value = value << 1 | b
        chars.append(chr(63 + value))
    return head + "".join(chars)


def parse_graph6(text: str) -> Graph:
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} out of graph6 range", i)
    pos = 0
    if text[0] == "~":
        if len(text) >= 2 and text[1] == "~":
            raise Graph6Error("graphs beyond 258047 vertices unsupported", 0)
        if len(text) < 4:
            raise Graph6Error("truncated size header", len(text))
        n = 0
        for ch in text[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    else:
        n = ord(text[0]) - 63
        pos = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds the cap of {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(text) - pos != nchars:
        raise Graph6Error(
            f"expected {nchars} data characters for n={n}, got {len(text) - pos}",
            pos)
    masks = [0] * n
    bit = 0
    for i in range(nchars):
        value = ord(text[pos + i]) - 63
        for j in range(5, -1, -1):
            if bit >= nbits:
                if value >> j & 1:
                    raise Graph6Error("non-zero padding bits", pos + i)
                continue
            if value >> j & 1:
                u, v = _edge_from_column_index(bit)
                _add_edge(masks, u, v)
            bit += 1
    return _graph_from_masks(n, masks)


def _edge_from_column_index(idx: int) -> tuple[int, int]:
    # bits run x01 | x02 x12 | x03 x13 x23 | ...: column v holds v bits
    v = 1
    while idx >= v:
        idx -= v
        v += 1
    return idx, v


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then m lines "u v", 0-based,
# '#' starts a comment.

def parse_edge_list(text: str) -> Graph:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise GraphConstructionError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphConstructionError(f"bad header line {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise GraphConstructionError(
            f"header declares {m} edges, found {len(rows) - 1}")
    pairs = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise GraphConstructionError(f"bad edge line {row!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, pairs)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Random graphs.

def random_gnp(n: int, p, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): each pair is an edge independently with
    probability p.  Fully determined by the seed."""
    frac = Fraction(p)
    if not 0 <= frac <= 1:
        raise ValueError("p must lie in [0, 1]")
    threshold = int(frac * (1 << 64))
    rng = SplitMix64(seed)
    masks = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_u64() < threshold:
                _add_edge(masks, u, v)
    return _graph_from_masks(n, masks)


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with n vertices and exactly m edges."""
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"m must lie in [0, {total}]")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng = SplitMix64(seed)
    rng.shuffle(pairs)
    return from_edge_list(n, pairs[:m])
