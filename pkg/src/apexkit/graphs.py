"""Core graph representation and structural operations.

Graphs are finite, simple, undirected, on at most 62 vertices (the
single-byte graph6 size regime).  Adjacency is stored as one Python int
per vertex, used as a bitset over vertex indices; every algorithm in the
hot path works bit-parallel on these rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EdgeAbsent, MalformedGraph6, VertexAbsent

MAX_N = 62


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph: vertex count plus bitset adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_N}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & (1 << v):
                raise ValueError(f"loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"adjacency row {v} mentions vertices >= n")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency {v}->{u}")

    # -- construction ------------------------------------------------------

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u},{v}) for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)))

    @staticmethod
    def complete_bipartite(a: int, b: int) -> "Graph":
        left = (1 << a) - 1
        right = ((1 << (a + b)) - 1) ^ left
        rows = [right] * a + [left] * b
        return Graph(a + b, tuple(rows))

    @staticmethod
    def cycle(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    # -- basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield u, v + u + 1

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def __repr__(self) -> str:  # noqa: D105 - debugging aid
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs ----------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def subgraph(self, keep: int) -> "Graph":
        """Induced subgraph on the bitmask ``keep``, indices compacted."""
        old = list(bits(keep))
        pos = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            row = 0
            for u in bits(self.adj[v] & keep):
                row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(old), tuple(rows))

    def delete_vertex(self, v: int) -> "Graph":
        if not 0 <= v < self.n:
            raise VertexAbsent(f"vertex {v} not in graph of order {self.n}")
        return self.subgraph(((1 << self.n) - 1) ^ (1 << v))

    def relabel(self, perm: tuple[int, ...]) -> "Graph":
        """Image under ``perm``: vertex v of self becomes perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise VertexAbsent(f"edge {e} outside graph of order {g.n}")
    if not g.has_edge(u, v):
        raise EdgeAbsent(f"edge {e} absent")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Contract edge ``e``; the result is simplified (no loops or parallel
    edges) and re-indexed to 0..n-2.

    The merged vertex takes the smaller endpoint's index; indices above the
    larger endpoint shift down by one.
    """
    u, v = min(e), max(e)
    if not (0 <= u and v < g.n):
        raise VertexAbsent(f"edge {e} outside graph of order {g.n}")
    if not g.has_edge(u, v):
        raise EdgeAbsent(f"edge {e} absent")
    merged = (g.adj[u] | g.adj[v]) & ~(1 << u) & ~(1 << v)
    low = (1 << v) - 1  # bits below the dropped index keep their position
    rows = []
    for w in range(g.n):
        if w == v:
            continue
        row = merged if w == u else g.adj[w]
        if w != u and row & (1 << v):
            row = (row & ~(1 << v)) | (1 << u)
        rows.append((row & low) | ((row >> 1) & ~low))
    return Graph(g.n - 1, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g and h side by side; h's vertices are shifted up by g.n."""
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return min(row.bit_count() for row in g.adj)


def components(g: Graph, removed: Iterable[int] | int = 0) -> list[frozenset[int]]:
    """Connected components of g minus the removed vertices.

    ``removed`` may be a vertex iterable or a bitmask.  Components are
    returned sorted by their minimum vertex.
    """
    gone = removed if isinstance(removed, int) else mask_of(removed)
    return [frozenset(bits(c)) for c in component_masks(g.adj, ((1 << g.n) - 1) & ~gone)]


def component_masks(adj: tuple[int, ...], alive: int) -> list[int]:
    """Component bitmasks of the subgraph induced on ``alive``."""
    out = []
    left = alive
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            grow &= alive & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(component_masks(g.adj, (1 << g.n) - 1)) == 1


@dataclass(frozen=True)
class CutPartition:
    """A disconnecting vertex set together with the pieces it leaves."""

    cut: frozenset[int]
    components: tuple[frozenset[int], ...]


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s,t non-adjacent).

    Unit-capacity flow on the split digraph: vertex w becomes w_in -> w_out
    (node ids 2w and 2w+1); s and t keep a single node each.  BFS
    augmentation; fine at these orders.
    """
    fwd: dict[int, dict[int, int]] = {}

    def add(a: int, b: int, c: int) -> None:
        fwd.setdefault(a, {})[b] = fwd.get(a, {}).get(b, 0) + c
        fwd.setdefault(b, {}).setdefault(a, 0)

    def node(w: int, outgoing: bool) -> int:
        if w in (s, t):
            return 2 * w
        return 2 * w + 1 if outgoing else 2 * w

    for w in range(g.n):
        if w not in (s, t):
            add(2 * w, 2 * w + 1, 1)
    for u, v in g.edges():
        add(node(u, True), node(v, False), 1)
        add(node(v, True), node(u, False), 1)
    source, sink = 2 * s, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        queue = [source]
        while queue and sink not in prev:
            nxt = []
            for a in queue:
                for b, c in fwd[a].items():
                    if c > 0 and b not in prev:
                        prev[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            fwd[a][b] -= 1
            fwd[b][a] += 1
            b = a
        flow += 1


def connectivity(g: Graph) -> int:
    """Vertex connectivity; 0 for disconnected graphs and for n <= 1,
    n-1 for complete graphs."""
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    full = (1 << n) - 1
    if all(g.adj[v] == full ^ (1 << v) for v in range(n)):
        return n - 1
    best = n - 1
    for s, t in itertools.combinations(range(n), 2):
        if not g.has_edge(s, t):
            best = min(best, _local_connectivity(g, s, t))
            if best == 1:
                # cannot go lower for a connected graph
                break
    return best


def enumerate_two_cuts(g: Graph) -> list[CutPartition]:
    """All vertex pairs whose removal disconnects g, lexicographic order."""
    full = (1 << g.n) - 1
    out = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            alive = full & ~(1 << a) & ~(1 << b)
            comps = component_masks(g.adj, alive)
            if len(comps) >= 2:
                out.append(
                    CutPartition(
                        cut=frozenset((a, b)),
                        components=tuple(frozenset(bits(c)) for c in comps),
                    )
                )
    return out


# -- graph6 codec ----------------------------------------------------------


def decode_graph6(text: str) -> Graph:
    """Decode a single-byte-header graph6 word (n <= 62, no '>>graph6<<'
    prefix).

    Bits cover the upper triangle column by column: (0,1), (0,2), (1,2),
    (0,3), ... with each character carrying six bits, most significant
    first, offset by 63.
    """
    word = text.strip()
    if not word:
        raise MalformedGraph6("empty graph6 word")
    if any(not 63 <= ord(ch) <= 126 for ch in word):
        raise MalformedGraph6(f"character outside 63..126 in {word!r}")
    n = ord(word[0]) - 63
    if n > MAX_N:
        raise MalformedGraph6(f"order {n} beyond single-byte regime")
    nbits = n * (n - 1) // 2
    body = word[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"body length {len(body)} wrong for order {n} in {word!r}"
        )
    rows = [0] * n
    k = 0
    for ch in body:
        group = ord(ch) - 63
        for shift in (5, 4, 3, 2, 1, 0):
            if k >= nbits:
                if (group >> shift) & 1:
                    raise MalformedGraph6(f"nonzero padding in {word!r}")
                continue
            if (group >> shift) & 1:
                u, v = _triangle_pos(k)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, tuple(rows))


def _triangle_pos(k: int) -> tuple[int, int]:
    # invert k = v*(v-1)/2 + u for u < v
    v = 1
    while (v + 1) * v // 2 <= k:
        v += 1
    return k - v * (v - 1) // 2, v


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_N:
        raise MalformedGraph6(f"order {g.n} beyond single-byte regime")
    chunks = [chr(g.n + 63)]
    group = 0
    filled = 0
    for v in range(1, g.n):
        col = g.adj[v]
        for u in range(v):
            group = (group << 1) | ((col >> u) & 1)
            filled += 1
            if filled == 6:
                chunks.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        chunks.append(chr((group << (6 - filled)) + 63))
    return "".join(chunks)
