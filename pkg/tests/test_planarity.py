import itertools
import random

import networkx as nx
import pytest

from apexkit.canon import canon_cert
from apexkit.errors import VertexAbsent
from apexkit.graphs import Graph
from apexkit.planarity import (
    enumerate_kuratowski,
    enumerate_witnesses,
    is_planar,
    kuratowski_avoiding,
    kuratowski_witness,
    validate_witness,
)


def petersen():
    return Graph.from_edges(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        + [(i, 5 + i) for i in range(5)],
    )


def random_graph(rng, n, p):
    return Graph.from_edges(
        n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    )


def nx_planar(g):
    G = nx.empty_graph(g.n)
    G.add_edges_from(g.edges())
    return nx.check_planarity(G)[0]


def test_known_graphs():
    assert is_planar(Graph.complete(4))
    assert is_planar(Graph.cycle(9))
    assert is_planar(Graph.empty(7))
    assert not is_planar(Graph.complete(5))
    assert not is_planar(Graph.complete_bipartite(3, 3))
    assert not is_planar(petersen())
    # planar blocks glued at cut vertices stay planar
    wheels = Graph.from_edges(
        9,
        [(0, i) for i in range(1, 5)]
        + [(1, 2), (2, 3), (3, 4), (4, 1)]
        + [(4, 5), (5, 6), (6, 4), (6, 7), (7, 8), (8, 6)],
    )
    assert is_planar(wheels)


def test_matches_reference_library():
    rng = random.Random(2024)
    for _ in range(1500):
        n = rng.randrange(1, 13)
        g = random_graph(rng, n, rng.choice([0.15, 0.3, 0.5, 0.7, 0.9]))
        assert is_planar(g) == nx_planar(g), sorted(g.edges())


def test_euler_bound_is_respected():
    rng = random.Random(8)
    for _ in range(400):
        g = random_graph(rng, rng.randrange(3, 12), 0.8)
        if g.m > 3 * g.n - 6:
            assert not is_planar(g)


def test_witness_none_iff_planar_and_validates():
    rng = random.Random(77)
    seen_nonplanar = 0
    for _ in range(600):
        g = random_graph(rng, rng.randrange(3, 12), rng.choice([0.3, 0.5, 0.7]))
        w = kuratowski_witness(g)
        if is_planar(g):
            assert w is None
        else:
            seen_nonplanar += 1
            ok, why = validate_witness(g, w)
            assert ok, why
    assert seen_nonplanar > 100


def test_witness_k5():
    w = kuratowski_witness(Graph.complete(5))
    assert w.kind == "K5"
    assert w.branch == (0, 1, 2, 3, 4)
    assert all(len(p) == 2 for p in w.paths) and len(w.paths) == 10


def test_witness_subdivided_k33():
    # split the (0,3) edge of K3,3 with a new vertex 6
    g = Graph.from_edges(
        7, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5) if (a, b) != (0, 3)] + [(0, 6), (6, 3)]
    )
    w = kuratowski_witness(g)
    assert w.kind == "K33"
    assert sorted(len(p) for p in w.paths) == [2] * 8 + [3]
    assert (0, 6, 3) in w.paths
    ok, why = validate_witness(g, w)
    assert ok, why


def test_witness_petersen_validates():
    p = petersen()
    w = kuratowski_witness(p)
    ok, why = validate_witness(p, w)
    assert ok, why
    assert w.kind == "K33"  # Petersen has no degree-4-capable K5 subdivision


def test_witness_is_deterministic():
    g = petersen()
    assert kuratowski_witness(g) == kuratowski_witness(g)


def test_avoiding():
    k6 = Graph.complete(6)
    for v in range(6):
        w = kuratowski_avoiding(k6, v)
        assert w.kind == "K5" and v not in w.vertex_set
        ok, why = validate_witness(k6, w)
        assert ok, why
    assert kuratowski_avoiding(Graph.cycle(8), 3) is None
    # deleting one vertex of K5 leaves a planar K4
    assert kuratowski_avoiding(Graph.complete(5), 0) is None
    with pytest.raises(VertexAbsent):
        kuratowski_avoiding(k6, 6)


# ---------------------------------------------------------------------------
# enumeration, cross-checked by an independent subset-scan oracle: a set of
# edges is a minimal non-planar edge set iff smoothing its degree-2 vertices
# leaves exactly K5 or K3,3
# ---------------------------------------------------------------------------

K5_CERT = canon_cert(5, Graph.complete(5).adj)
K33_CERT = canon_cert(6, Graph.complete_bipartite(3, 3).adj)


def is_kuratowski_subdivision(edges):
    support = sorted({v for e in edges for v in e})
    idx = {v: i for i, v in enumerate(support)}
    n = len(support)
    adjacency = {i: set() for i in range(n)}
    for u, v in edges:
        adjacency[idx[u]].add(idx[v])
        adjacency[idx[v]].add(idx[u])
    while True:
        deg2 = [v for v, nb in adjacency.items() if len(nb) == 2]
        if not deg2:
            break
        v = deg2[0]
        x, y = adjacency.pop(v)
        adjacency[x].discard(v)
        adjacency[y].discard(v)
        if y in adjacency[x]:
            return False  # smoothing would create a parallel edge
        adjacency[x].add(y)
        adjacency[y].add(x)
    if any(len(nb) < 3 for nb in adjacency.values()):
        return False
    relabel = {v: i for i, v in enumerate(sorted(adjacency))}
    k = len(relabel)
    rows = [0] * k
    for v, nb in adjacency.items():
        for w in nb:
            rows[relabel[v]] |= 1 << relabel[w]
    cert = canon_cert(k, tuple(rows))
    return (k == 5 and cert == K5_CERT) or (k == 6 and cert == K33_CERT)


def scan_minimal_nonplanar_edge_sets(g):
    all_edges = sorted(g.edges())
    hits = set()
    for r in range(len(all_edges) + 1):
        for chosen in itertools.combinations(all_edges, r):
            if is_kuratowski_subdivision(chosen):
                hits.add(frozenset(chosen))
    return hits


def test_enumerate_k5():
    res = enumerate_witnesses(Graph.complete(5))
    assert len(res.witnesses) == 1 and res.exhaustive


def test_enumerate_counts_match_subset_scan():
    k33e = Graph.complete_bipartite(3, 3).add_edge(0, 1)
    oracle = scan_minimal_nonplanar_edge_sets(k33e)
    res = enumerate_witnesses(k33e)
    assert res.exhaustive
    assert {w.edge_set for w in res.witnesses} == oracle
    assert len(oracle) == 1  # frozen

    k6 = Graph.complete(6)
    oracle6 = scan_minimal_nonplanar_edge_sets(k6)
    res6 = enumerate_witnesses(k6)
    assert res6.exhaustive
    assert {w.edge_set for w in res6.witnesses} == oracle6
    assert len(oracle6) == 76  # frozen
    for w in res6.witnesses:
        ok, why = validate_witness(k6, w)
        assert ok, why


def test_enumerate_deterministic_and_capped():
    k6 = Graph.complete(6)
    a = enumerate_kuratowski(k6)
    b = enumerate_kuratowski(k6)
    assert a == b
    small = enumerate_witnesses(k6, cap=10)
    assert len(small.witnesses) == 10 and not small.exhaustive
    assert list(small.witnesses) == list(a[:10])
    assert enumerate_witnesses(Graph.cycle(5)).witnesses == ()


def test_enumerate_rejects_bad_cap():
    with pytest.raises(ValueError):
        enumerate_witnesses(Graph.complete(5), cap=0)
