"""Apex sets and minor-minimality certification.

A graph is apex when deleting some single vertex leaves it planar.  The
certification here establishes the two halves of being an obstruction for
that property: no vertex of g works (witnessed per vertex by a Kuratowski
subdivision that avoids it), while after every single edge deletion or
contraction some vertex does (witnessed per edge by that vertex).  Single
edge moves suffice: every proper minor factors through one of them, and
deleting an isolated vertex never changes apexness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import dedup_canonical
from .errors import ConfigInvalid
from .graphs import Graph, contract_edge, delete_edge, disjoint_union
from .planarity import (
    KuratowskiWitness,
    is_planar,
    kuratowski_avoiding,
    planar_rows,
)

__all__ = [
    "EdgeEvidence",
    "ObstructionCertificate",
    "ObstructionFailure",
    "apex_set",
    "disconnected_obstructions",
    "first_apex",
    "is_obstruction",
]


def _rows_without(n: int, rows: tuple[int, ...], v: int) -> tuple[int, ...]:
    low = (1 << v) - 1
    return tuple(
        (rows[u] & low) | ((rows[u] >> 1) & ~low) for u in range(n) if u != v
    )


def apex_set(g: Graph) -> frozenset[int]:
    """Every vertex whose deletion planarizes g; all of them when g is
    already planar, empty exactly when g is non-apex."""
    return frozenset(
        v
        for v in range(g.n)
        if planar_rows(g.n - 1, _rows_without(g.n, g.adj, v))
    )


def first_apex(g: Graph) -> int | None:
    """Smallest apex vertex, or None when g is non-apex."""
    for v in range(g.n):
        if planar_rows(g.n - 1, _rows_without(g.n, g.adj, v)):
            return v
    return None


@dataclass(frozen=True, slots=True)
class EdgeEvidence:
    """Apex vertices appearing after the two one-edge moves on ``edge``.

    ``deletion_apex`` is a vertex of g - e (same labels as g);
    ``contraction_apex`` is a vertex of g / e in the contracted labeling.
    """

    edge: tuple[int, int]
    deletion_apex: int
    contraction_apex: int


@dataclass(frozen=True, slots=True)
class ObstructionCertificate:
    non_apex_evidence: tuple[KuratowskiWitness, ...]
    edge_evidence: tuple[EdgeEvidence, ...]

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True, slots=True)
class ObstructionFailure:
    reason: str
    vertex: int | None = None
    edge: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return False


def is_obstruction(g: Graph) -> ObstructionCertificate | ObstructionFailure:
    """Certify g as minor-minimal non-apex, or say which move disproves it.

    The certificate carries, for every vertex, a Kuratowski subdivision of
    g - v, and for every edge, an apex vertex of each of g - e and g / e.
    Deletions are checked before contractions, cheapest first.
    """
    if is_planar(g):
        return ObstructionFailure("graph is planar, hence apex", vertex=0 if g.n else None)
    witnesses = []
    for v in range(g.n):
        w = kuratowski_avoiding(g, v)
        if w is None:
            return ObstructionFailure(f"vertex {v} is an apex", vertex=v)
        witnesses.append(w)
    evidence = []
    for e in sorted(g.edges()):
        dz = first_apex(delete_edge(g, e))
        if dz is None:
            return ObstructionFailure(
                f"deleting edge {e} leaves a non-apex graph", edge=e
            )
        cz = first_apex(contract_edge(g, e))
        if cz is None:
            return ObstructionFailure(
                f"contracting edge {e} leaves a non-apex graph", edge=e
            )
        evidence.append(EdgeEvidence(e, dz, cz))
    return ObstructionCertificate(tuple(witnesses), tuple(evidence))


def disconnected_obstructions(max_order: int) -> list[Graph]:
    """The disconnected minor-minimal non-apex graphs up to ``max_order``.

    Both components of such a graph must be minor-minimal non-planar (a
    planar component would make apexness depend on the other side alone, and
    a reducible one would yield a smaller non-apex minor), so the search
    space is pairs of Kuratowski graphs, verified as such before use.
    """
    if max_order < 12:
        raise ConfigInvalid("max_order below 12 cannot cover all three results")
    pieces = [Graph.complete(5), Graph.complete_bipartite(3, 3)]
    for p in pieces:
        assert not is_planar(p)
        for v in range(p.n):
            assert is_planar(p.delete_vertex(v))
        for e in p.edges():
            assert is_planar(delete_edge(p, e)) and is_planar(contract_edge(p, e))
    out = []
    for i, a in enumerate(pieces):
        for b in pieces[i:]:
            if a.n + b.n <= max_order:
                candidate = disjoint_union(a, b)
                if is_obstruction(candidate):
                    out.append(candidate)
    return dedup_canonical(out)
