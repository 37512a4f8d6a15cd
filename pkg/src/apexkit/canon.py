"""Canonical labeling, isomorphism testing, and automorphism discovery.

Individualization-refinement with backtracking: refine an ordered partition
to equitability, branch on the vertices of the first smallest non-singleton
cell, and take as certificate the lexicographically greatest relabeled
adjacency-row tuple over all discrete leaves.  Automorphisms discovered from
leaf collisions prune sibling branches, which keeps highly symmetric graphs
(complete multipartite, Petersen, ...) cheap.  Self-contained and geared to
graphs of at most a few dozen vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graphs import Graph, encode_graph6


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """A relabeling onto the canonical representative, plus that representative.

    ``relabeling[v]`` is the canonical index of source vertex ``v``;
    applying it to the source graph yields exactly ``decode_graph6(canon_g6)``.
    Two graphs are isomorphic iff their ``canon_g6`` strings are equal.
    """

    relabeling: tuple[int, ...]
    canon_g6: str


def _refine(adj: Sequence[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(tuple(groups[sig]))
        if not changed:
            return cells
        cells = out


def _closure(seed: int, gens: list[tuple[int, ...]]) -> set[int]:
    orbit = {seed}
    frontier = [seed]
    while frontier:
        v = frontier.pop()
        for s in gens:
            w = s[v]
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    return orbit


def _search(n: int, adj: Sequence[int]):
    """Return (best leaf permutation, its certificate, automorphism generators)."""
    if n == 0:
        return (), (), []
    gens: list[tuple[int, ...]] = []
    first_perm: tuple[int, ...] | None = None
    first_cert: tuple[int, ...] | None = None
    best_perm: tuple[int, ...] | None = None
    best_cert: tuple[int, ...] | None = None

    def leaf(cells: list[tuple[int, ...]]):
        perm = [0] * n
        for pos, cell in enumerate(cells):
            perm[cell[0]] = pos
        rows = [0] * n
        for v in range(n):
            row, acc = adj[v], 0
            while row:
                low = row & -row
                acc |= 1 << perm[low.bit_length() - 1]
                row ^= low
            rows[perm[v]] = acc
        return tuple(perm), tuple(rows)

    def record(p1: tuple[int, ...], p2: tuple[int, ...]) -> None:
        # both leaves present the same labeled graph, so p2^-1 . p1 fixes adj
        inv2 = [0] * n
        for v, pos in enumerate(p2):
            inv2[pos] = v
        sigma = tuple(inv2[p1[v]] for v in range(n))
        if any(sigma[v] != v for v in range(n)) and sigma not in gens:
            gens.append(sigma)

    def descend(cells: list[tuple[int, ...]], base: tuple[int, ...]) -> None:
        nonlocal first_perm, first_cert, best_perm, best_cert
        cells = _refine(adj, cells)
        target, tsize = -1, n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < tsize:
                target, tsize = i, len(c)
        if target < 0:
            perm, cert = leaf(cells)
            if first_cert is None:
                first_perm, first_cert = perm, cert
                best_perm, best_cert = perm, cert
                return
            if cert == first_cert:
                record(perm, first_perm)
            if cert > best_cert:
                best_perm, best_cert = perm, cert
            elif cert == best_cert and best_cert != first_cert:
                record(perm, best_perm)
            return

        cell = cells[target]
        done: list[int] = []
        for v in cell:
            if done:
                stab = [s for s in gens if all(s[b] == b for b in base)]
                if stab and not _closure(v, stab).isdisjoint(done):
                    done.append(v)
                    continue
            done.append(v)
            split = cells[:target] + [(v,), tuple(u for u in cell if u != v)]
            split += cells[target + 1 :]
            descend(split, base + (v,))

    descend([tuple(range(n))], ())
    return best_perm, best_cert, gens


def canon_cert(n: int, rows: Sequence[int]) -> tuple[int, ...]:
    """Canonical adjacency rows: equal tuples iff isomorphic graphs.

    Raw-row fast path for enumeration loops that dedup by certificate and
    never need the graph6 string or the relabeling.
    """
    return _search(n, tuple(rows))[1]


@lru_cache(maxsize=65536)
def canonical_form(g: Graph) -> CanonicalForm:
    perm, cert, _ = _search(g.n, g.adj)
    return CanonicalForm(relabeling=perm, canon_g6=encode_graph6(Graph(g.n, cert)))


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.n, _search(g.n, g.adj)[1])


@lru_cache(maxsize=16384)
def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Generators of (a subgroup of) the automorphism group found during the
    canonical search.  Sufficient for symmetry reduction wherever results are
    afterwards deduplicated canonically; an undiscovered symmetry only costs
    time, never correctness."""
    return tuple(_search(g.n, g.adj)[2])


def vertex_orbits(g: Graph) -> list[frozenset[int]]:
    gens = list(automorphism_generators(g))
    seen: set[int] = set()
    orbits = []
    for v in range(g.n):
        if v in seen:
            continue
        orb = _closure(v, gens)
        seen |= orb
        orbits.append(frozenset(orb))
    return orbits


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(
        h.degree(v) for v in range(h.n)
    ):
        return False
    return canon_cert(g.n, g.adj) == canon_cert(h.n, h.adj)


def dedup_canonical(graphs: Iterable[Graph]) -> list[Graph]:
    """One representative per isomorphism class, in canonical form, sorted."""
    reps: dict[tuple[int, tuple[int, ...]], Graph] = {}
    for g in graphs:
        cert = canon_cert(g.n, g.adj)
        reps.setdefault((g.n, cert), Graph(g.n, cert))
    return [reps[k] for k in sorted(reps)]
