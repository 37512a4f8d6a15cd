"""Minor containment testing and the small fixed pattern graphs.

``has_minor`` runs a branch-set search: each pattern vertex is mapped to a
connected, pairwise-disjoint set of host vertices so that every pattern edge
has a host edge between the corresponding sets.  Pattern vertices are placed
in a constraint-first order, candidate sets are enumerated root-canonically,
and branches are cut by vertex budget, boundary degree, and the fact that a
planar host cannot contain a non-planar minor.

The pattern catalog carries the named graphs the rest of the package needs:
the Kuratowski graphs with one edge added or removed, and the four members of
the Petersen family (the closure of K6 under triangle-star exchanges) that
show up as rejection certificates: Y_minus (7 vertices), M (8), P7 (9), and
the Petersen graph itself.  Their adjacencies were frozen from one run of
that closure; the test suite re-derives the family from scratch and checks
each is exactly the member its degree profile says it is.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .canon import canon_cert
from .graphs import Graph, bits
from .planarity import is_planar

__all__ = [
    "K33",
    "K33_MINUS_E",
    "K33_PLUS_E",
    "K5",
    "K5_MINUS_E",
    "M",
    "P7",
    "PATTERNS",
    "PETERSEN",
    "Y_MINUS",
    "has_minor",
    "minor_closed_check",
]

K5 = Graph.complete(5)
K33 = Graph.complete_bipartite(3, 3)
K33_PLUS_E = K33.add_edge(0, 1)
K5_MINUS_E = Graph.from_edges(
    5, [e for e in K5.edges() if e != (0, 1)]
)
K33_MINUS_E = Graph.from_edges(
    6, [e for e in K33.edges() if e != (0, 3)]
)
Y_MINUS = Graph.from_edges(
    7,
    [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6),
     (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
)
M = Graph.from_edges(
    8,
    [(0, 2), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (2, 7), (3, 5), (3, 6),
     (3, 7), (4, 5), (4, 6), (4, 7), (5, 7), (6, 7)],
)
P7 = Graph.from_edges(
    9,
    [(0, 3), (0, 5), (0, 8), (1, 2), (1, 5), (1, 7), (2, 4), (2, 8), (3, 4),
     (3, 7), (4, 6), (5, 6), (6, 7), (6, 8), (7, 8)],
)
PETERSEN = Graph.from_edges(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, 5 + i) for i in range(5)],
)

PATTERNS: dict[str, Graph] = {
    "K5": K5,
    "K33": K33,
    "K33_plus_e": K33_PLUS_E,
    "K5_minus_e": K5_MINUS_E,
    "K33_minus_e": K33_MINUS_E,
    "M": M,
    "Y_minus": Y_MINUS,
    "P7": P7,
    "Petersen": PETERSEN,
}


def _grow(adj, sett, ext, forb, allowed, cap, size):
    """Connected supersets of sett (others from allowed), at most cap vertices."""
    yield sett
    if size >= cap:
        return
    while ext:
        vbit = ext & -ext
        ext ^= vbit
        v = vbit.bit_length() - 1
        child_ext = (ext | (adj[v] & allowed)) & ~(sett | vbit) & ~forb
        yield from _grow(adj, sett | vbit, child_ext, forb, allowed, cap, size + 1)
        forb |= vbit


def _minor_search(
    gn: int, gadj: Sequence[int], hn: int, hadj: Sequence[int], reserve: int = 0
) -> bool:
    if hn == 0:
        return True
    hdeg = [hadj[u].bit_count() for u in range(hn)]
    order: list[int] = []
    left = set(range(hn))
    while left:
        u = max(left, key=lambda v: (sum((hadj[v] >> w) & 1 for w in order), hdeg[v]))
        order.append(u)
        left.remove(u)

    branch = [0] * hn
    reach = [0] * hn

    def assign(k: int, free: int) -> bool:
        if k == hn:
            return True
        u = order[k]
        cap = free.bit_count() - (hn - k - 1) - reserve
        if cap < 1:
            return False
        anb = [w for w in order[:k] if (hadj[u] >> w) & 1]
        for root in bits(free):
            allowed = free & ~((1 << (root + 1)) - 1)
            for sett in _grow(
                gadj, 1 << root, gadj[root] & allowed, 0, allowed, cap, 1
            ):
                if any(not (reach[w] & sett) for w in anb):
                    continue
                boundary = 0
                for x in bits(sett):
                    boundary |= gadj[x]
                boundary &= ~sett
                if boundary.bit_count() < hdeg[u]:
                    continue
                branch[u] = sett
                reach[u] = boundary
                if assign(k + 1, free & ~sett):
                    return True
        return False

    return assign(0, (1 << gn) - 1)


@lru_cache(maxsize=1 << 16)
def _minor_memo(gn, gcert, hn, hcert, reserve):
    return _minor_search(gn, gcert, hn, hcert, reserve)


def has_minor(g: Graph, h: Graph) -> bool:
    """True iff deletions and contractions can turn g into a copy of h."""
    if h.n > g.n or h.m > g.m:
        return False
    if h.m == 0:
        return True
    if not is_planar(h) and is_planar(g):
        return False
    if h.n == g.n:
        # no room to contract or delete vertices: h must sit inside g edgewise
        dg = sorted(g.degree(v) for v in range(g.n))
        dh = sorted(h.degree(v) for v in range(h.n))
        if any(a < b for a, b in zip(dg, dh)):
            return False
    spare = sum(1 for v in range(h.n) if not h.adj[v])
    if spare:
        # isolated pattern vertices each need one host vertex the branch
        # sets must leave untouched
        keep = [v for v in range(h.n) if h.adj[v]]
        h = h.subgraph(sum(1 << v for v in keep))
    if g.n <= 13 and h.n <= 13:
        return _minor_memo(g.n, g.adj, h.n, h.adj, spare)
    return _minor_search(g.n, g.adj, h.n, h.adj, spare)


def minor_closed_check(graphs: Sequence[Graph]) -> list[tuple[int, int]]:
    """All ordered pairs (i, j), i != j, where graphs[i] is a minor of
    graphs[j].  Empty exactly when the list is a minor-antichain."""
    if not graphs:
        raise ValueError("need at least one graph")
    certs = [canon_cert(g.n, g.adj) for g in graphs]
    out = []
    for j, big in enumerate(graphs):
        for i, small in enumerate(graphs):
            if i == j:
                continue
            if (small.n, certs[i]) == (big.n, certs[j]):
                out.append((i, j))  # identical graphs are mutual minors
            elif has_minor(big, small):
                out.append((i, j))
    return out
