"""Discovery engines: planar-graph generation and obstruction searches.

Three searches live here.  ``generate_connected_planar`` streams one
representative per isomorphism class, built level by level: every
connected graph on k+1 vertices arises from a connected graph on k
vertices by adding one vertex, planarity survives vertex deletion, so
growing each level's survivors by one attached vertex and deduplicating
canonically is exhaustive.  ``heavy_nonplanar_search`` rebuilds the
graphs whose heavy side induces a nonplanar graph from their known
anatomy.  ``unique_cut_search`` runs the big enumeration: every
connected planar heavy side of order five through nine, every viable
pair of attachment neighborhoods, every light-side variant, then full
verification of the survivors.  ``verify_catalog`` re-checks a stream
of graph6 lines the way the embedded catalog is checked.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import multiprocessing
import os
from dataclasses import dataclass

from .apex import ConfigInvalid, disconnected_obstructions, is_obstruction
from .canon import canonical_form
from .graphs import (
    Graph,
    MalformedGraph6,
    bits,
    component_masks,
    connectivity,
    contract_edge,
    decode_graph6,
    delete_edge,
    disjoint_union,
    encode_graph6,
    mask_of,
    min_degree,
)
from .minors import K5, K33, K33_PLUS_E, minor_closed_check
from .planarity import is_planar, planar_rows
from .structure import NotClassifiable, classify

# -- planar generation -----------------------------------------------------

# Orders whose counts have been cross-checked against the labeled brute
# force (small n) and against each other via two independent routes.
_GEN_MAX_N = 12


def _planar_children(parent_g6: str) -> set[str]:
    """Canonical forms of all connected planar one-vertex extensions."""
    parent = decode_graph6(parent_g6)
    k = parent.n
    budget = 3 * (k + 1) - 6 - parent.m  # planar edge count ceiling
    out: set[str] = set()
    for sub in range(1, 1 << k):
        if sub.bit_count() > budget and k + 1 >= 3:
            continue
        rows = tuple(
            row | (1 << k) if sub >> v & 1 else row
            for v, row in enumerate(parent.adj)
        ) + (sub,)
        if planar_rows(k + 1, rows):
            out.add(canonical_form(Graph(k + 1, rows)).canon_g6)
    return out


_level_cache: dict[int, tuple[str, ...]] = {}


def _connected_level(n: int, workers: int = 1) -> tuple[str, ...]:
    """Sorted canonical graph6 words of all connected planar graphs on
    exactly n vertices."""
    if n in _level_cache:
        return _level_cache[n]
    if n < 1 or n > _GEN_MAX_N:
        raise ConfigInvalid(f"order {n} outside 1..{_GEN_MAX_N}")
    if n == 1:
        level: tuple[str, ...] = (encode_graph6(Graph.empty(1)),)
    else:
        parents = _connected_level(n - 1, workers)
        found: set[str] = set()
        if workers > 1 and len(parents) >= 64:
            with multiprocessing.Pool(workers) as pool:
                for chunk in pool.imap_unordered(
                    _planar_children, parents, chunksize=64
                ):
                    found |= chunk
        else:
            for word in parents:
                found |= _planar_children(word)
        level = tuple(sorted(found))
    _level_cache[n] = level
    return level


def generate_connected_planar(n: int, workers: int = 1):
    """One representative per isomorphism class of connected planar
    graphs on n vertices, in canonical graph6 order."""
    for word in _connected_level(n, workers):
        yield decode_graph6(word)


def _disconnected_planar(n: int, workers: int = 1) -> list[Graph]:
    """One representative per class of disconnected planar graphs on n
    vertices: multisets of at least two connected pieces."""
    out: list[Graph] = []

    def pieces(total: int, max_order: int, acc: list[str]) -> None:
        if total == 0:
            if len(acc) >= 2:
                g = decode_graph6(acc[0])
                for word in acc[1:]:
                    g = disjoint_union(g, decode_graph6(word))
                out.append(g)
            return
        for order in range(min(total, max_order), 0, -1):
            lvl = _connected_level(order, workers)
            if acc and order == ord(acc[-1][0]) - 63:
                # within equal orders keep words non-decreasing so each
                # multiset of pieces appears exactly once
                start = lvl.index(acc[-1])
                choices = lvl[start:]
            else:
                choices = lvl
            for word in choices:
                pieces(total - order, order, acc + [word])

    pieces(n, n - 1, [])
    return out


def generate_planar(n: int, workers: int = 1):
    """Every planar graph on n vertices up to isomorphism, connected or
    not: the connected level plus all multiset unions of smaller
    connected pieces."""
    yield from generate_connected_planar(n, workers)
    yield from _disconnected_planar(n, workers)


# -- search configuration --------------------------------------------------

_PATTERN_KINDS = {"K5": K5, "K33": K33, "K33e": K33_PLUS_E}


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the attachment search over planar heavy sides."""

    heavy_order_range: tuple[int, int] = (5, 9)
    light_kinds: tuple[str, ...] = ("K5", "K33", "K33e")
    min_attach_degree: int = 3
    workers: int = 1
    source: str | None = None
    output: str | None = None
    checkpoint: str | None = None
    batch_size: int = 200

    def validated(self) -> "SearchConfig":
        lo, hi = self.heavy_order_range
        if not (4 <= lo <= hi <= _GEN_MAX_N):
            raise ConfigInvalid(
                f"heavy order range {lo}..{hi} not within 4..{_GEN_MAX_N}"
            )
        if not self.light_kinds:
            raise ConfigInvalid("at least one light kind required")
        unknown = [k for k in self.light_kinds if k not in _PATTERN_KINDS]
        if unknown:
            raise ConfigInvalid(
                f"unknown light kinds {unknown}; choose from "
                f"{sorted(_PATTERN_KINDS)}"
            )
        if self.min_attach_degree < 1:
            raise ConfigInvalid("min_attach_degree must be at least 1")
        if self.workers < 1:
            raise ConfigInvalid("workers must be at least 1")
        if self.batch_size < 1:
            raise ConfigInvalid("batch_size must be at least 1")
        return self


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a constructive search: verified graphs in sorted
    canonical graph6 form, plus counters for every pruning rule."""

    obstructions: tuple[str, ...]
    stats: dict[str, int]


# -- light-side building blocks --------------------------------------------


def _exact_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Every automorphism, by brute force over all labelings.  Only
    sane for the handful-of-vertices patterns used below."""
    return [
        perm
        for perm in itertools.permutations(range(g.n))
        if g.relabel(perm).adj == g.adj
    ]


_anchor_cache: dict[str, tuple[Graph, ...]] = {}


def _anchored_light_parts(kind: str) -> tuple[Graph, ...]:
    """Ways to name an ordered adjacent pair (a, b) in a small pattern,
    one per symmetry class.  Each comes back relabeled with a at 0 and
    b at 1 and the a-b edge removed: gluing such a part onto a pair of
    joint vertices and adding that edge back restores the pattern."""
    if kind in _anchor_cache:
        return _anchor_cache[kind]
    pattern = _PATTERN_KINDS[kind]
    auts = _exact_automorphisms(pattern)
    seen: set[tuple[int, int]] = set()
    parts: list[Graph] = []
    for x in range(pattern.n):
        for y in range(pattern.n):
            if not pattern.has_edge(x, y):
                continue
            orbit_key = min((p[x], p[y]) for p in auts)
            if orbit_key in seen:
                continue
            seen.add(orbit_key)
            perm = [0] * pattern.n
            slot = 2
            for v in range(pattern.n):
                if v == x:
                    perm[v] = 0
                elif v == y:
                    perm[v] = 1
                else:
                    perm[v] = slot
                    slot += 1
            anchored = pattern.relabel(tuple(perm))
            part = delete_edge(anchored, (0, 1))
            # the separation argument needs each joint vertex to reach
            # the whole light interior on its own
            full = (1 << part.n) - 1
            for joint in (0, 1):
                alive = full & ~(1 << (1 - joint))
                if len(component_masks(part.adj, alive)) != 1:
                    raise AssertionError(f"light part for {kind} splits")
            parts.append(part)
    _anchor_cache[kind] = tuple(parts)
    return _anchor_cache[kind]


def _embeds_fixing_joints(p: Graph, q: Graph) -> bool:
    """Is there a copy of p inside q on the same vertex count with the
    joint pair {0, 1} landing on {0, 1}?"""
    if p.n != q.n:
        return False
    edges = list(p.edges())
    for j0, j1 in ((0, 1), (1, 0)):
        for tail in itertools.permutations(range(2, p.n)):
            perm = (j0, j1) + tail
            if all(q.has_edge(perm[x], perm[y]) for x, y in edges):
                return True
    return False


_active_cache: dict[tuple[str, ...], tuple[Graph, ...]] = {}


def _active_parts(kinds: tuple[str, ...]) -> tuple[Graph, ...]:
    """The anchored parts worth gluing: one that properly contains
    another part on the same joints always produces a proper supergraph
    of a graph that is already not apex, so it can never appear in a
    minimal example and is dropped up front."""
    if kinds not in _active_cache:
        parts = [p for kind in kinds for p in _anchored_light_parts(kind)]
        keep = tuple(
            q
            for q in parts
            if not any(
                p.m < q.m and _embeds_fixing_joints(p, q) for p in parts
            )
        )
        _active_cache[kinds] = keep
    return _active_cache[kinds]


def _assemble(
    heavy_rows: tuple[int, ...],
    h: int,
    sa: int,
    sb: int,
    part: Graph,
    ab_edge: bool = False,
) -> Graph:
    """Glue one heavy side, two attachment masks, and an anchored light
    part into a single graph.  Heavy vertices keep their labels, the
    joint pair lands on h and h+1, the light interior follows."""
    abit, bbit = 1 << h, 1 << (h + 1)
    rows = [
        row
        | (abit if sa >> v & 1 else 0)
        | (bbit if sb >> v & 1 else 0)
        for v, row in enumerate(heavy_rows)
    ]
    rows.extend(r << h for r in part.adj)
    rows[h] |= sa
    rows[h + 1] |= sb
    if ab_edge:
        rows[h] |= bbit
        rows[h + 1] |= abit
    return Graph(h + part.n, tuple(rows))


def _subdivided(g: Graph, u: int, v: int) -> Graph:
    """Replace the edge uv by a two-edge path through a fresh vertex."""
    w = g.n
    rows = list(g.adj)
    rows[u] = rows[u] & ~(1 << v) | (1 << w)
    rows[v] = rows[v] & ~(1 << u) | (1 << w)
    rows.append(1 << u | 1 << v)
    return Graph(g.n + 1, tuple(rows))


# -- search for graphs with a nonplanar heavy side -------------------------


def heavy_nonplanar_search() -> SearchResult:
    """Enumerate every candidate whose heavy side is one of the two
    minimal nonplanar graphs, subdivided at most once, with each joint
    vertex attached to two of its vertices and a complete or complete
    bipartite light block; keep whatever verifies.

    The subdivision cap is forced: a joint vertex has only two
    neighbors on the heavy side, so a doubly subdivided side would
    leave a degree-two vertex no attachment can repair.
    """
    heavies = (K5, _subdivided(K5, 0, 1), K33, _subdivided(K33, 0, 3))
    stats = {
        "assembled": 0,
        "pruned_min_degree": 0,
        "duplicate_canonical": 0,
        "pruned_connectivity": 0,
        "candidates_tested": 0,
        "obstructions_found": 0,
    }
    seen: dict[str, Graph] = {}
    for heavy in heavies:
        h = heavy.n
        pairs = list(itertools.combinations(range(h), 2))
        for i, pa in enumerate(pairs):
            sa = mask_of(pa)
            # both light kinds here are symmetric in the joint pair, so
            # attachment pairs can be taken unordered
            for pb in pairs[i:]:
                sb = mask_of(pb)
                for kind in ("K5", "K33"):
                    for part in _anchored_light_parts(kind):
                        for ab_edge in (False, True):
                            g = _assemble(heavy.adj, h, sa, sb, part, ab_edge)
                            stats["assembled"] += 1
                            if min_degree(g) < 3:
                                stats["pruned_min_degree"] += 1
                                continue
                            cert = canonical_form(g).canon_g6
                            if cert in seen:
                                stats["duplicate_canonical"] += 1
                                continue
                            seen[cert] = g
    found: list[str] = []
    for cert in sorted(seen):
        g = seen[cert]
        if connectivity(g) != 2:
            stats["pruned_connectivity"] += 1
            continue
        stats["candidates_tested"] += 1
        if is_obstruction(g):
            stats["obstructions_found"] += 1
            found.append(cert)
    return SearchResult(tuple(found), stats)


# -- search for two-piece graphs -------------------------------------------


def disconnected_search(max_order: int = 12) -> SearchResult:
    """Unions of two vertex-disjoint minimal nonplanar graphs, verified
    whole."""
    found = sorted(
        canonical_form(g).canon_g6 for g in disconnected_obstructions(max_order)
    )
    return SearchResult(
        tuple(found),
        {"candidates_tested": 3, "obstructions_found": len(found)},
    )


# -- the attachment search over planar heavy sides -------------------------


def _attachment_family(heavy: Graph, min_attach: int) -> list[int]:
    """Inclusion-minimal vertex masks usable as the heavy-side
    neighborhood of one joint vertex: at least ``min_attach`` vertices,
    meeting every component of every single-vertex deletion (else that
    vertex plus a joint vertex cuts the graph somewhere new), and
    making the side plus an apex on the mask nonplanar (a side that
    folds flat cannot carry its half of the crossing structure).

    Only minimal masks matter: both conditions survive adding
    vertices, so a graph glued along a strict superset properly
    contains the graph glued along the member — a graph that is
    already not an apex graph — and can never be minor-minimal
    itself."""
    h, rows = heavy.n, heavy.adj
    full = (1 << h) - 1

    def aug_nonplanar(s: int) -> bool:
        aug = tuple(
            row | (1 << h) if s >> v & 1 else row for v, row in enumerate(rows)
        ) + (s,)
        return not planar_rows(h + 1, aug)

    if not aug_nonplanar(full):
        return []
    cut_pieces: list[int] = []
    for v in range(h):
        comps = component_masks(rows, full & ~(1 << v))
        if len(comps) > 1:
            cut_pieces.extend(comps)
    minimal: list[int] = []
    for size in range(min_attach, h + 1):
        for combo in itertools.combinations(range(h), size):
            s = mask_of(combo)
            if any(not piece & s for piece in cut_pieces):
                continue
            if any(s & m == m for m in minimal):
                continue
            if aug_nonplanar(s):
                minimal.append(s)
    return minimal


def _attachment_viable(g2: Graph, s: int) -> bool:
    """Do the two family conditions still hold for this mask on a
    reduced heavy side?  Used to recognize candidates whose glued graph
    keeps a non-apex proper minor after a single edge deletion or
    contraction on the heavy side — such candidates can never be
    minimal, whatever the light part, so the whole attachment pair is
    skipped."""
    n2, rows = g2.n, g2.adj
    aug = tuple(
        row | (1 << n2) if s >> v & 1 else row for v, row in enumerate(rows)
    ) + (s,)
    if planar_rows(n2 + 1, aug):
        return False
    full = (1 << n2) - 1
    for v in range(n2):
        for comp in component_masks(rows, full & ~(1 << v)):
            if not comp & s:
                return False
    return True


def _single_edge_reducer(heavy: Graph):
    """Memoized map from an attachment mask to a pair of edge bitmasks:
    bit i of the first (second) says deleting (contracting) the i-th
    heavy edge keeps the mask viable on the reduced side.  An
    attachment pair where some edge stays viable for both masks under
    the same reduction can be skipped outright — the reduced glue is a
    proper minor that is already not apex."""
    h_edges = list(heavy.edges())
    del_sides = [delete_edge(heavy, e) for e in h_edges]
    con_sides = [contract_edge(heavy, e) for e in h_edges]
    memo: dict[int, tuple[int, int]] = {}

    def reductions(s: int) -> tuple[int, int]:
        if s not in memo:
            dm = cm = 0
            for i, (u, v) in enumerate(h_edges):
                if _attachment_viable(del_sides[i], s):
                    dm |= 1 << i
                s2 = 0
                for x in bits(s):
                    s2 |= 1 << (x if x < v else (u if x == v else x - 1))
                if _attachment_viable(con_sides[i], s2):
                    cm |= 1 << i
            memo[s] = (dm, cm)
        return memo[s]

    return reductions


def _pair_cut_pieces(heavy: Graph) -> list[list[int]]:
    """Component masks left by deleting each vertex pair that actually
    disconnects the side.  A viable joint neighborhood union must meet
    every component, or the deleted pair would be a second cut."""
    h, rows = heavy.n, heavy.adj
    full = (1 << h) - 1
    out: list[list[int]] = []
    for u in range(h):
        for v in range(u + 1, h):
            comps = component_masks(rows, full & ~(1 << u) & ~(1 << v))
            if len(comps) > 1:
                out.append(comps)
    return out


_BATCH_STAT_KEYS = (
    "heavy_sides_seen",
    "pruned_foldable_side",
    "attachment_pairs",
    "pruned_min_degree",
    "pruned_second_cut",
    "pruned_reducible",
    "pruned_edge_budget",
    "assembled",
    "duplicate_canonical",
    "candidates_tested",
    "obstructions_found",
)


def _unique_cut_batch(
    args: tuple[str, tuple[str, ...], int, tuple[str, ...]],
) -> tuple[str, tuple[str, ...], dict[str, int]]:
    """Process one batch of heavy sides; safe to run in a worker."""
    batch_id, words, min_attach, kinds = args
    parts = _active_parts(kinds)
    stats = dict.fromkeys(_BATCH_STAT_KEYS, 0)
    survivors: set[str] = set()
    seen: set[str] = set()
    for word in words:
        heavy = decode_graph6(word)
        h = heavy.n
        stats["heavy_sides_seen"] += 1
        family = _attachment_family(heavy, min_attach)
        if not family:
            stats["pruned_foldable_side"] += 1
            continue
        pair_pieces = _pair_cut_pieces(heavy)
        reductions = _single_edge_reducer(heavy)
        deg1 = deg2 = 0
        for v, row in enumerate(heavy.adj):
            d = row.bit_count()
            if d == 1:
                deg1 |= 1 << v
            elif d == 2:
                deg2 |= 1 << v
        # an edge-deleted candidate still needs room for an apex over a
        # planar remainder, which caps the total edge count
        budgets = [4 * (h + p.n) - 9 - heavy.m - p.m for p in parts]
        # unordered attachment pairs suffice: the anchored parts list
        # carries both orientations of every asymmetric designation
        for i, sa in enumerate(family):
            ka = sa.bit_count()
            for sb in family[i:]:
                stats["attachment_pairs"] += 1
                if deg1 & ~(sa & sb) or deg2 & ~(sa | sb):
                    stats["pruned_min_degree"] += 1
                    continue
                union = sa | sb
                ok = True
                for comps in pair_pieces:
                    for piece in comps:
                        if not piece & union:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    stats["pruned_second_cut"] += 1
                    continue
                da, ca = reductions(sa)
                db, cb = reductions(sb)
                if da & db or ca & cb:
                    # some heavy edge can be deleted or contracted with
                    # both masks staying viable: the reduced glue is
                    # still not apex, so nothing minimal comes from here
                    stats["pruned_reducible"] += 1
                    continue
                ksum = ka + sb.bit_count()
                for part, budget in zip(parts, budgets):
                    if ksum > budget:
                        stats["pruned_edge_budget"] += 1
                        continue
                    g = _assemble(heavy.adj, h, sa, sb, part)
                    stats["assembled"] += 1
                    cert = canonical_form(g).canon_g6
                    if cert in seen:
                        stats["duplicate_canonical"] += 1
                        continue
                    seen.add(cert)
                    stats["candidates_tested"] += 1
                    if is_obstruction(g):
                        stats["obstructions_found"] += 1
                        survivors.add(cert)
    return batch_id, tuple(sorted(survivors)), stats


def _heavy_stream(cfg: SearchConfig) -> list[str]:
    """Canonical graph6 words of the heavy sides to process, in a fixed
    deterministic order."""
    lo, hi = cfg.heavy_order_range
    if cfg.source is None:
        return [
            word
            for n in range(lo, hi + 1)
            for word in _connected_level(n, cfg.workers)
        ]
    words: set[str] = set()
    with open(cfg.source, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            g = decode_graph6(line)
            if lo <= g.n <= hi and is_planar(g) and connectivity(g) >= 1:
                words.add(canonical_form(g).canon_g6)
    return sorted(words)


def _stream_fingerprint(cfg: SearchConfig, words: list[str]) -> str:
    payload = json.dumps(
        {
            "heavy_order_range": list(cfg.heavy_order_range),
            "light_kinds": list(cfg.light_kinds),
            "min_attach_degree": cfg.min_attach_degree,
            "batch_size": cfg.batch_size,
            "stream": hashlib.sha256("\n".join(words).encode()).hexdigest(),
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()


def _load_checkpoint(
    path: str, fingerprint: str
) -> dict[str, tuple[tuple[str, ...], dict[str, int]]]:
    done: dict[str, tuple[tuple[str, ...], dict[str, int]]] = {}
    if not os.path.exists(path):
        return done
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue  # torn tail from an interrupted run
            if "fingerprint" in rec:
                if rec["fingerprint"] != fingerprint:
                    raise ConfigInvalid(
                        f"checkpoint {path} was written for a different "
                        "configuration or heavy stream; remove it to restart"
                    )
                continue
            done[rec["batch"]] = (
                tuple(rec["survivors"]),
                {k: int(v) for k, v in rec["stats"].items()},
            )
    return done


def unique_cut_search(config: SearchConfig | None = None) -> SearchResult:
    """Exhaustive attachment search: every connected planar heavy side
    in the configured order range, every pair of viable joint
    neighborhoods, every light part, full verification of what
    remains.  Batches checkpoint to a journal so an interrupted run
    resumes where it stopped, and results are merged in a fixed order
    so the outcome is identical whatever the worker count."""
    cfg = (config or SearchConfig()).validated()
    words = _heavy_stream(cfg)
    batches = [
        (f"{i:05d}", tuple(words[off : off + cfg.batch_size]))
        for i, off in enumerate(range(0, len(words), cfg.batch_size))
    ]
    fingerprint = _stream_fingerprint(cfg, words)
    done: dict[str, tuple[tuple[str, ...], dict[str, int]]] = {}
    journal = None
    if cfg.checkpoint:
        done = _load_checkpoint(cfg.checkpoint, fingerprint)
        journal = open(cfg.checkpoint, "a", encoding="ascii")
        if not done:
            journal.write(json.dumps({"fingerprint": fingerprint}) + "\n")
            journal.flush()
    try:
        pending = [
            (bid, chunk, cfg.min_attach_degree, cfg.light_kinds)
            for bid, chunk in batches
            if bid not in done
        ]

        def record(result: tuple[str, tuple[str, ...], dict[str, int]]) -> None:
            bid, survivors, stats = result
            done[bid] = (survivors, stats)
            if journal is not None:
                journal.write(
                    json.dumps(
                        {
                            "batch": bid,
                            "survivors": list(survivors),
                            "stats": stats,
                        },
                        sort_keys=True,
                    )
                    + "\n"
                )
                journal.flush()

        if cfg.workers > 1 and len(pending) > 1:
            with multiprocessing.Pool(cfg.workers) as pool:
                for result in pool.imap_unordered(_unique_cut_batch, pending):
                    record(result)
        else:
            for item in pending:
                record(_unique_cut_batch(item))
    finally:
        if journal is not None:
            journal.close()
    totals = dict.fromkeys(_BATCH_STAT_KEYS, 0)
    merged: set[str] = set()
    overlap = 0
    for bid, _ in batches:
        survivors, stats = done[bid]
        for key, value in stats.items():
            totals[key] = totals.get(key, 0) + value
        for cert in survivors:
            if cert in merged:
                overlap += 1
            merged.add(cert)
    totals["duplicate_across_batches"] = overlap
    totals["heavy_sides_total"] = len(words)
    obstructions = tuple(sorted(merged))
    if cfg.output:
        with open(cfg.output, "w", encoding="ascii") as fh:
            fh.writelines(cert + "\n" for cert in obstructions)
    return SearchResult(obstructions, totals)


# -- catalog re-verification -----------------------------------------------


def verify_catalog(
    lines, pairwise_minors: bool = False
) -> dict[str, object]:
    """Re-check a stream of graph6 lines: each must decode, have
    connectivity two, verify as an obstruction, and classify.  The
    stream as a whole is censused, deduplicated, and optionally checked
    for minor relations between its members (slow: minutes to an hour
    for a catalog-sized stream)."""
    rows: list[dict[str, object]] = []
    by_cert: dict[str, list[int]] = {}
    census: dict[str, int] = {}
    graphs: list[Graph] = []
    graph_rows: list[int] = []
    malformed = 0
    for index, raw in enumerate(lines):
        word = raw.strip()
        if not word:
            continue
        try:
            g = decode_graph6(word)
        except MalformedGraph6 as exc:
            malformed += 1
            rows.append(
                {"index": index, "g6": word, "pass": False, "error": str(exc)}
            )
            continue
        conn = connectivity(g)
        outcome = is_obstruction(g)
        verified = bool(outcome)
        try:
            label: str | None = classify(g).label
        except NotClassifiable:
            label = None
        cert = canonical_form(g).canon_g6
        ok = verified and conn == 2 and label is not None
        if not verified:
            reason = outcome.reason
        elif conn != 2:
            reason = f"connectivity {conn}, need 2"
        elif label is None:
            reason = "not classifiable"
        else:
            reason = None
        rows.append(
            {
                "index": index,
                "g6": word,
                "n": g.n,
                "m": g.m,
                "connectivity": conn,
                "obstruction": verified,
                "label": label,
                "canonical": cert,
                "pass": ok,
                "reason": reason,
            }
        )
        if label is not None:
            census[label] = census.get(label, 0) + 1
        by_cert.setdefault(cert, []).append(index)
        graphs.append(g)
        graph_rows.append(index)
    duplicates = [idxs for idxs in by_cert.values() if len(idxs) > 1]
    all_pass = malformed == 0 and all(r["pass"] for r in rows)
    summary: dict[str, object] = {
        "count": len(rows),
        "distinct": len(by_cert),
        "malformed": malformed,
        "duplicates": duplicates,
        "census": dict(sorted(census.items())),
        "all_pass": all_pass,
    }
    if pairwise_minors:
        violations = [
            (graph_rows[i], graph_rows[j])
            for i, j in minor_closed_check(graphs)
        ]
        summary["minor_violations"] = violations
        summary["all_pass"] = all_pass and not violations
    return {"rows": rows, "summary": summary}
