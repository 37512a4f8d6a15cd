"""Planarity decision and Kuratowski-subdivision extraction.

Decision: split into biconnected blocks, then embed each dense-enough block
face by face (Demoucron-style): keep a set of faces of a partially embedded
subgraph, compute the bridges of the remaining part, and embed a path of a
bridge into an admissible face until either everything embeds or some bridge
has no admissible face.

Witnesses: when non-planar, greedily delete edges (in a fixed order) while
non-planarity survives.  What remains is edge-minimal non-planar, i.e.
exactly a subdivision of K5 or K3,3, whose branch/path structure is then read
off the degrees.  Enumeration of *all* witness edge sets branches on the
edges of a found witness: every other minimal edge set survives in g minus
some witness edge, so the recursion is complete; results are deduplicated and
capped, with an explicit exhaustiveness flag.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

from .errors import VertexAbsent
from .graphs import Graph, bits, component_masks

__all__ = [
    "KuratowskiWitness",
    "WitnessEnumeration",
    "enumerate_kuratowski",
    "enumerate_witnesses",
    "is_planar",
    "kuratowski_avoiding",
    "kuratowski_witness",
    "planar_rows",
    "validate_witness",
]


@dataclass(frozen=True, slots=True)
class KuratowskiWitness:
    """A subdivision of K5 or K3,3 inside a host graph.

    ``branch`` lists the 5 (K5) or 6 (K33) high-degree vertices; ``paths``
    the 10 or 9 host paths joining them, each written out vertex by vertex
    with all internal vertices of degree two in the witness.
    """

    kind: Literal["K5", "K33"]
    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        out = set()
        for p in self.paths:
            for u, v in zip(p, p[1:]):
                out.add((u, v) if u < v else (v, u))
        return frozenset(out)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)

    def relabeled(self, f) -> "KuratowskiWitness":
        return KuratowskiWitness(
            self.kind,
            tuple(f(v) for v in self.branch),
            tuple(tuple(f(v) for v in p) for p in self.paths),
        )


@dataclass(frozen=True, slots=True)
class WitnessEnumeration:
    witnesses: tuple[KuratowskiWitness, ...]
    exhaustive: bool


# ---------------------------------------------------------------------------
# decision
# ---------------------------------------------------------------------------


def _initial_cycle(n: int, adj: Sequence[int]) -> list[int]:
    parent = [-2] * n
    parent[0] = -1

    def dfs(u: int) -> list[int] | None:
        for w in bits(adj[u]):
            if parent[w] == -2:
                parent[w] = u
                found = dfs(w)
                if found:
                    return found
            elif w != parent[u]:
                cyc = [u]
                x = u
                while x != w:
                    x = parent[x]
                    cyc.append(x)
                return cyc
        return None

    cyc = dfs(0)
    assert cyc is not None
    return cyc


def _dmp(n: int, adj: Sequence[int]) -> bool:
    """Planarity of a connected biconnected graph on >= 5 vertices."""
    m = sum(r.bit_count() for r in adj) // 2
    if m > 3 * n - 6:
        return False
    cyc = _initial_cycle(n, adj)
    emb_v = sum(1 << v for v in cyc)
    emb_e: set[tuple[int, int]] = set()
    for u, v in zip(cyc, cyc[1:] + cyc[:1]):
        emb_e.add((u, v) if u < v else (v, u))
    faces: list[list[int]] = [list(cyc), list(reversed(cyc))]

    while len(emb_e) < m:
        face_sets = [set(f) for f in faces]
        # bridges: chords between embedded vertices, and components of the rest
        frags: list[tuple[frozenset[int], list[int] | int]] = []
        for u in bits(emb_v):
            for v in bits(adj[u] & emb_v):
                if u < v and (u, v) not in emb_e:
                    frags.append((frozenset((u, v)), [u, v]))
        for comp in component_masks(adj, ((1 << n) - 1) & ~emb_v):
            reach = 0
            for v in bits(comp):
                reach |= adj[v]
            frags.append((frozenset(bits(reach & emb_v)), comp))

        chosen = None
        for attach, payload in frags:
            adm = [i for i in range(len(faces)) if attach <= face_sets[i]]
            if not adm:
                return False
            if chosen is None or len(adm) == 1:
                chosen = (attach, payload, adm[0])
            if len(adm) == 1:
                break
        assert chosen is not None
        attach, payload, fi = chosen

        if isinstance(payload, list):
            path = payload
        else:
            # a path through the component between two distinct attachments;
            # the first hop must enter the component so the path only uses
            # fragment edges
            a0 = min(attach)
            prev: dict[int, int] = {}
            queue: deque[int] = deque()
            for y in bits(adj[a0] & payload):
                prev[y] = a0
                queue.append(y)
            path = []
            while queue:
                x = queue.popleft()
                landing = adj[x] & emb_v & ~(1 << a0)
                if landing:
                    path = [(landing & -landing).bit_length() - 1, x]
                    while path[-1] != a0:
                        path.append(prev[path[-1]])
                    path.reverse()
                    break
                for y in bits(adj[x] & payload):
                    if y not in prev:
                        prev[y] = x
                        queue.append(y)
            assert path

        boundary = faces[fi]
        i, j = boundary.index(path[0]), boundary.index(path[-1])
        if i <= j:
            seg1 = boundary[i : j + 1]
            seg2 = boundary[j:] + boundary[: i + 1]
        else:
            seg1 = boundary[i:] + boundary[: j + 1]
            seg2 = boundary[j : i + 1]
        inner = path[1:-1]
        faces[fi] = seg1 + inner[::-1]
        faces.append(seg2 + inner)
        for v in inner:
            emb_v |= 1 << v
        for u, v in zip(path, path[1:]):
            emb_e.add((u, v) if u < v else (v, u))
    return True


@lru_cache(maxsize=1 << 17)
def planar_rows(n: int, rows: tuple[int, ...]) -> bool:
    """Raw-row planarity (hot path for enumeration loops)."""
    if n <= 4:
        return True
    m = sum(r.bit_count() for r in rows) // 2
    if m > 3 * n - 6:
        return False
    for block in _block_masks(n, rows):
        bn = block.bit_count()
        if bn < 5:
            continue
        verts = list(bits(block))
        pos = {v: i for i, v in enumerate(verts)}
        sub = [0] * bn
        for v in verts:
            row = rows[v] & block
            for w in bits(row):
                sub[pos[v]] |= 1 << pos[w]
        bm = sum(r.bit_count() for r in sub) // 2
        # cycle rank <= 3 cannot host a K3,3 subdivision (rank 4) or K5 (rank 6)
        if bm <= bn + 2:
            continue
        if not _dmp(bn, sub):
            return False
    return True


def _block_masks(n: int, adj: Sequence[int]) -> list[int]:
    """Vertex masks of the biconnected blocks."""
    disc = [0] * n
    low = [0] * n
    clock = [0]
    estack: list[tuple[int, int]] = []
    out: list[int] = []

    def dfs(u: int, pe: int) -> None:
        clock[0] += 1
        disc[u] = low[u] = clock[0]
        for w in bits(adj[u]):
            if disc[w] == 0:
                estack.append((u, w))
                dfs(w, u)
                if low[w] < low[u]:
                    low[u] = low[w]
                if low[w] >= disc[u]:
                    mask = 0
                    while True:
                        x, y = estack.pop()
                        mask |= (1 << x) | (1 << y)
                        if (x, y) == (u, w):
                            break
                    out.append(mask)
            elif w != pe and disc[w] < disc[u]:
                estack.append((u, w))
                if disc[w] < low[u]:
                    low[u] = disc[w]

    for s in range(n):
        if disc[s] == 0 and adj[s]:
            dfs(s, -1)
    return out


def is_planar(g: Graph) -> bool:
    return planar_rows(g.n, g.adj)


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------


def _minimal_nonplanar_rows(n: int, rows: Sequence[int]) -> list[int]:
    """Greedily delete edges (ascending) while non-planarity survives.

    One pass suffices: an edge kept earlier stays critical after later
    deletions, because planarity of a deletion result is inherited by its
    subgraphs.  The survivor is exactly a Kuratowski subdivision.
    """
    cur = list(rows)
    for u in range(n):
        for v in bits(cur[u]):
            if v <= u:
                continue
            cur[u] &= ~(1 << v)
            cur[v] &= ~(1 << u)
            if not planar_rows(n, tuple(cur)):
                continue
            cur[u] |= 1 << v
            cur[v] |= 1 << u
    return cur


def _witness_from_rows(rows: Sequence[int]) -> KuratowskiWitness:
    deg = {v: rows[v].bit_count() for v in range(len(rows)) if rows[v]}
    branch = tuple(sorted(v for v, d in deg.items() if d >= 3))
    assert len(branch) in (5, 6), "input is not a Kuratowski subdivision"
    kind: Literal["K5", "K33"] = "K5" if len(branch) == 5 else "K33"
    in_branch = set(branch)
    paths = []
    for b in branch:
        for first in bits(rows[b]):
            path = [b, first]
            while path[-1] not in in_branch:
                nxt = rows[path[-1]] & ~(1 << path[-2])
                path.append(nxt.bit_length() - 1)
            if b < path[-1]:
                paths.append(tuple(path))
    return KuratowskiWitness(kind, branch, tuple(sorted(paths)))


def kuratowski_witness(g: Graph) -> KuratowskiWitness | None:
    """A subdivision of K5 or K3,3 in g, or None exactly when g is planar."""
    if is_planar(g):
        return None
    return _witness_from_rows(_minimal_nonplanar_rows(g.n, g.adj))


def kuratowski_avoiding(g: Graph, v: int) -> KuratowskiWitness | None:
    """A witness inside g - v (labels of g), or None iff g - v is planar."""
    if not 0 <= v < g.n:
        raise VertexAbsent(f"vertex {v} not in graph on {g.n} vertices")
    w = kuratowski_witness(g.delete_vertex(v))
    if w is None:
        return None
    return w.relabeled(lambda x: x if x < v else x + 1)


def enumerate_witnesses(
    g: Graph, cap: int = 10000, state_budget: int = 300_000
) -> WitnessEnumeration:
    """All distinct Kuratowski edge sets of g, up to cap.

    Branches on the edges of each found witness: any other minimal edge set
    misses at least one of those edges, hence survives in the corresponding
    child graph.  ``exhaustive`` is False when the cap or the state budget
    cut the recursion short.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if is_planar(g):
        return WitnessEnumeration((), True)
    n = g.n
    found: dict[frozenset[tuple[int, int]], KuratowskiWitness] = {}
    order: list[KuratowskiWitness] = []
    start = g.adj
    seen_states = {start}
    queue = deque([start])
    exhaustive = True
    while queue:
        rows = queue.popleft()
        if not planar_rows(n, rows):
            w = _witness_from_rows(_minimal_nonplanar_rows(n, rows))
            es = w.edge_set
            if es not in found:
                if len(found) >= cap:
                    exhaustive = False
                    break
                found[es] = w
                order.append(w)
            for u, v in sorted(es):
                child = list(rows)
                child[u] &= ~(1 << v)
                child[v] &= ~(1 << u)
                child_t = tuple(child)
                if child_t not in seen_states:
                    if len(seen_states) >= state_budget:
                        exhaustive = False
                        continue
                    seen_states.add(child_t)
                    queue.append(child_t)
    return WitnessEnumeration(tuple(order), exhaustive)


def enumerate_kuratowski(g: Graph, cap: int = 10000) -> list[KuratowskiWitness]:
    return list(enumerate_witnesses(g, cap).witnesses)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def validate_witness(g: Graph, w: KuratowskiWitness) -> tuple[bool, str]:
    """Check every structural invariant of a witness against its host."""
    want_branch, want_paths = (5, 10) if w.kind == "K5" else (6, 9)
    if len(w.branch) != want_branch or len(set(w.branch)) != want_branch:
        return False, f"expected {want_branch} distinct branch vertices"
    if len(w.paths) != want_paths:
        return False, f"expected {want_paths} paths, got {len(w.paths)}"
    bset = set(w.branch)
    if not all(0 <= v < g.n for v in bset):
        return False, "branch vertex outside host"
    internal_seen: set[int] = set()
    edges_seen: set[tuple[int, int]] = set()
    pattern: set[frozenset[int]] = set()
    for p in w.paths:
        if len(p) < 2 or p[0] not in bset or p[-1] not in bset or p[0] == p[-1]:
            return False, f"bad path endpoints {p}"
        inner = p[1:-1]
        if bset & set(inner):
            return False, "branch vertex interior to a path"
        if len(set(inner)) != len(inner) or internal_seen & set(inner):
            return False, "paths not internally disjoint"
        internal_seen |= set(inner)
        for u, v in zip(p, p[1:]):
            if not g.has_edge(u, v):
                return False, f"({u},{v}) is not a host edge"
            e = (u, v) if u < v else (v, u)
            if e in edges_seen:
                return False, f"edge {e} reused"
            edges_seen.add(e)
        pattern.add(frozenset((p[0], p[-1])))
    if len(pattern) != want_paths:
        return False, "two paths join the same branch pair"
    if w.kind == "K5":
        ok = all(
            frozenset((a, b)) in pattern
            for i, a in enumerate(w.branch)
            for b in w.branch[i + 1 :]
        )
        if not ok:
            return False, "branch pairs not completely joined"
    else:
        # 2-color greedily from the path structure
        side = {w.branch[0]: 0}
        frontier = [w.branch[0]]
        while frontier:
            x = frontier.pop()
            for pair in pattern:
                if x in pair:
                    (y,) = pair - {x}
                    if y not in side:
                        side[y] = 1 - side[x]
                        frontier.append(y)
                    elif side[y] == side[x]:
                        return False, "path pattern not bipartite"
        part = [b for b in w.branch if side.get(b) == 0]
        if len(side) != 6 or len(part) != 3:
            return False, "branch pattern is not 3+3 bipartite"
        want = {frozenset((a, b)) for a in part for b in set(w.branch) - set(part)}
        if pattern != want:
            return False, "paths do not realize all 9 opposite pairs"
    # witness degrees
    degw = {}
    for u, v in edges_seen:
        degw[u] = degw.get(u, 0) + 1
        degw[v] = degw.get(v, 0) + 1
    want_deg = 4 if w.kind == "K5" else 3
    if any(degw[b] != want_deg for b in w.branch):
        return False, "branch degree wrong in witness"
    if any(degw[x] != 2 for x in internal_seen):
        return False, "internal degree wrong in witness"
    return True, "ok"
