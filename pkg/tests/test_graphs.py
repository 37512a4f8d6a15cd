import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apexkit.errors import EdgeAbsent, MalformedGraph6, VertexAbsent
from apexkit.graphs import (
    Graph,
    components,
    connectivity,
    contract_edge,
    decode_graph6,
    delete_edge,
    encode_graph6,
    enumerate_two_cuts,
    min_degree,
)

# ---------------------------------------------------------------------------
# Reference decoder: a deliberately separate implementation of the published
# graph6 byte layout (text bit-string, column-by-column upper triangle).
# Golden values below were frozen from one run of it.
# ---------------------------------------------------------------------------


def ref_decode(word):
    n = ord(word[0]) - 63
    bitstring = "".join(format(ord(c) - 63, "06b") for c in word[1:])
    need = n * (n - 1) // 2
    assert len(bitstring) - need in range(6) and set(bitstring[need:]) <= {"0"}
    edges = []
    k = 0
    for col in range(1, n):
        for row in range(col):
            if bitstring[k] == "1":
                edges.append((row, col))
            k += 1
    return n, edges


# frozen from the reference decoder
FIRST_HEAVY_NONPLANAR = "I`KxuJBpw"
FIRST_HEAVY_NONPLANAR_M = 23
FIRST_HEAVY_NONPLANAR_DEGSEQ = [4, 4, 4, 4, 4, 5, 5, 5, 5, 6]
K5_G6 = "D~{"


def k5():
    return Graph.complete(5)


def k33():
    return Graph.complete_bipartite(3, 3)


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(
        n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    )


def test_decode_first_catalog_entry_against_reference():
    g = decode_graph6(FIRST_HEAVY_NONPLANAR)
    n_ref, edges_ref = ref_decode(FIRST_HEAVY_NONPLANAR)
    assert g.n == n_ref == 10
    assert sorted(g.edges()) == sorted(edges_ref)
    assert g.m == FIRST_HEAVY_NONPLANAR_M
    assert sorted(g.degree(v) for v in range(g.n)) == FIRST_HEAVY_NONPLANAR_DEGSEQ


def test_decode_empty_five_vertex_graph():
    g = decode_graph6("D??")
    assert g.n == 5 and g.m == 0


def test_encode_k5_matches_reference():
    assert encode_graph6(k5()) == K5_G6
    assert decode_graph6(K5_G6) == k5()


def test_encode_empty():
    assert encode_graph6(Graph.empty(5)) == "D??"


def test_decode_rejects_garbage():
    for bad in ["", "D?", "D???", "I`Kxu", ">>graph6<<D~{", "D~\x1b", "~??", chr(63 + 63)]:
        with pytest.raises(MalformedGraph6):
            decode_graph6(bad)


def test_decode_rejects_nonzero_padding():
    # triangle on 3 vertices uses 3 of 6 bits; set a padding bit
    word = chr(3 + 63) + chr(0b111100 + 63)
    with pytest.raises(MalformedGraph6):
        decode_graph6(word)


def test_decode_trims_whitespace():
    assert decode_graph6(" D~{\n") == k5()


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_round_trip_random(data):
    n = data.draw(st.integers(0, 13))
    edges = data.draw(
        st.sets(
            st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))).filter(
                lambda e: e[0] < e[1]
            ),
            max_size=n * (n - 1) // 2,
        )
    )
    g = Graph.from_edges(n, sorted(edges))
    assert decode_graph6(encode_graph6(g)) == g


def test_round_trip_against_reference_decoder():
    rng = random.Random(7)
    for _ in range(100):
        g = random_graph(rng, rng.randrange(2, 12))
        word = encode_graph6(g)
        n_ref, edges_ref = ref_decode(word)
        assert n_ref == g.n and sorted(edges_ref) == sorted(g.edges())


# -- structural operations --------------------------------------------------


def test_contract_k33_edge():
    # frozen by direct computation from the definition: 9 edges, one lost to
    # the contraction, no parallel merge (endpoints share no neighbor)
    h = contract_edge(k33(), (0, 3))
    assert h.n == 5 and h.m == 8


def test_contract_c4_edge():
    h = contract_edge(Graph.cycle(4), (0, 1))
    assert h.n == 3 and h.m == 3


def test_contract_merges_parallel_edges():
    tri = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    h = contract_edge(tri, (0, 1))
    assert h.n == 2 and h.m == 1


def test_contract_and_delete_reject_non_edges():
    with pytest.raises(EdgeAbsent):
        delete_edge(k33(), (0, 1))
    with pytest.raises(EdgeAbsent):
        contract_edge(k33(), (0, 1))
    with pytest.raises(VertexAbsent):
        delete_edge(k33(), (0, 99))


def test_delete_edge_k5():
    assert delete_edge(k5(), (0, 1)).m == 9


def test_delete_vertex():
    g = k5().delete_vertex(2)
    assert g == Graph.complete(4)
    with pytest.raises(VertexAbsent):
        k5().delete_vertex(5)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_contract_never_leaves_loops_or_parallels(data):
    n = data.draw(st.integers(2, 9))
    g = data.draw(
        st.builds(
            Graph.from_edges,
            st.just(n),
            st.sets(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] < e[1]
                )
            ).map(sorted),
        )
    )
    if g.m == 0:
        return
    e = next(g.edges())
    h = contract_edge(g, e)
    assert h.n == g.n - 1
    # Graph's constructor enforces simplicity; also check symmetry survived
    for v in range(h.n):
        assert not h.adj[v] & (1 << v)


# -- connectivity, components, cuts -----------------------------------------


def brute_connectivity(g):
    """Smallest vertex set whose removal disconnects; n-1 if none does."""
    if g.n <= 1 or len(components(g)) > 1:
        return 0
    for k in range(1, g.n - 1):
        for cut in itertools.combinations(range(g.n), k):
            if len(components(g, cut)) >= 2:
                return k
    return g.n - 1


def test_connectivity_known_values():
    assert connectivity(k5()) == 4
    assert connectivity(k33()) == 3
    assert connectivity(Graph.cycle(6)) == 2
    two_k5 = Graph.from_edges(
        10,
        list(itertools.combinations(range(5), 2))
        + [(u + 5, v + 5) for u, v in itertools.combinations(range(5), 2)],
    )
    assert connectivity(two_k5) == 0
    assert connectivity(Graph.empty(1)) == 0


def test_connectivity_matches_brute_force_small():
    rng = random.Random(31)
    for _ in range(300):
        n = rng.randrange(2, 9)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6, 0.8]))
        assert connectivity(g) == brute_connectivity(g), encode_graph6(g)


def test_two_cuts_c6():
    cuts = enumerate_two_cuts(Graph.cycle(6))
    assert len(cuts) == 9
    # exactly the pairs at distance >= 2 on the cycle
    expect = {
        frozenset(p)
        for p in itertools.combinations(range(6), 2)
        if (p[1] - p[0]) % 6 not in (1, 5)
    }
    assert {c.cut for c in cuts} == expect
    for c in cuts:
        assert len(c.components) == 2


def test_two_cuts_k5_empty():
    assert enumerate_two_cuts(k5()) == []


def test_two_cuts_match_brute_force():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randrange(4, 11)
        g = random_graph(rng, n, rng.choice([0.25, 0.45, 0.7]))
        if len(components(g)) != 1:
            continue
        expect = {
            frozenset(p)
            for p in itertools.combinations(range(n), 2)
            if len(components(g, p)) >= 2
        }
        got = enumerate_two_cuts(g)
        assert [tuple(sorted(c.cut)) for c in got] == sorted(
            tuple(sorted(s)) for s in expect
        )
        for c in got:
            assert set().union(*c.components, c.cut) == set(range(n))


def test_components_of_disjoint_union():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert components(g) == [frozenset({0, 1}), frozenset({2, 3})]
    assert len(components(g, {1})) == 2


def test_min_degree():
    assert min_degree(k5()) == 4
    assert min_degree(Graph.from_edges(3, [(0, 1)])) == 0
