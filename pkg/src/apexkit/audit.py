"""Property audit: replays the structural facts underpinning the
catalog as machine checks on any given graph.

Eleven checks per graph, each reported exactly once with status
``pass``, ``fail``, or ``truncated``.  Universal claims quantifying
over Kuratowski subdivisions are checked over capped enumerations:
when the cap cuts the enumeration or the pair scan short, the status
is ``truncated`` rather than ``pass``, so a green row always means the
whole quantified range was covered.  Checks whose preconditions do not
apply (no two-cuts, not the unique-cut shape, some vertex deletion
planar) report pass with evidence starting ``vacuous`` — never a
silent skip.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .canon import canonical_form
from .graphs import (
    Graph,
    bits,
    component_masks,
    connectivity,
    contract_edge,
    delete_edge,
    enumerate_two_cuts,
    mask_of,
    min_degree,
)
from .planarity import enumerate_witnesses, is_planar
from .structure import (
    CLASS_LABELS,
    NotClassifiable,
    TwoCutRecord,
    _augment,
    basic_cuts,
    classify,
)

PASS, FAIL, TRUNCATED = "pass", "fail", "truncated"

CHECK_NAMES = (
    "min_degree_3",
    "two_components",
    "augment_nonplanar",
    "light_iso",
    "witness_overlap",
    "edge_cover",
    "unique_cut_structure",
    "basic_lemma",
    "branch_vertices",
    "branch_cover",
    "nonbranch_degree",
)

_UNIQUE_LABELS = (CLASS_LABELS[4], CLASS_LABELS[5])

# deterministic sampling bound for witness triples; the check is
# truncated whenever this (or the cap) leaves triples unexamined
_TRIPLE_CHOICES = 3


@dataclass(frozen=True)
class CheckRow:
    name: str
    status: str
    evidence: str


@dataclass(frozen=True)
class AuditReport:
    """Outcome of one graph's audit: canonical id plus one row per
    check, in the fixed check order."""

    graph: str
    checks: tuple[CheckRow, ...]

    @property
    def failures(self) -> tuple[CheckRow, ...]:
        return tuple(row for row in self.checks if row.status == FAIL)

    def as_rows(self) -> list[dict[str, str]]:
        """One JSON-ready object per (graph, check)."""
        return [
            {
                "graph": self.graph,
                "check": row.name,
                "status": row.status,
                "evidence": row.evidence,
            }
            for row in self.checks
        ]


def _worst(*statuses: str) -> str:
    if FAIL in statuses:
        return FAIL
    if TRUNCATED in statuses:
        return TRUNCATED
    return PASS


@dataclass(frozen=True)
class _Witness:
    """One enumerated subdivision with its bit views precomputed."""

    vmask: int
    bmask: int
    edges: frozenset[tuple[int, int]]
    incidence: tuple[int, ...]


class _Context:
    """Everything the checks share for one graph: the two-cut survey
    and a per-vertex memo of capped witness enumerations."""

    def __init__(self, g: Graph, cap: int):
        self.g = g
        self.cap = cap
        self.cuts = enumerate_two_cuts(g)
        self.conn = connectivity(g)
        self.basics: list[TwoCutRecord] = []
        self.label: str | None = None
        if self.conn == 2:
            try:
                decision = classify(g)
            except NotClassifiable:
                decision = None
            if decision is not None:
                self.label = decision.label
                self.basics = list(basic_cuts(g))
        self._wit: dict[int, tuple[tuple[_Witness, ...], bool]] = {}

    def witnesses(self, v: int) -> tuple[tuple[_Witness, ...], bool]:
        """Capped enumeration of the subdivisions of g - v, in g's own
        labels, sorted smallest edge set first."""
        if v not in self._wit:
            res = enumerate_witnesses(
                self.g.delete_vertex(v),
                cap=self.cap,
                state_budget=max(4000, 40 * self.cap),
            )
            packed = []
            for w in res.witnesses:
                w = w.relabeled(lambda x: x if x < v else x + 1)
                inc = [0] * self.g.n
                for x, y in w.edge_set:
                    inc[x] += 1
                    inc[y] += 1
                packed.append(
                    _Witness(
                        mask_of(w.vertex_set),
                        mask_of(w.branch),
                        w.edge_set,
                        tuple(inc),
                    )
                )
            packed.sort(key=lambda p: (len(p.edges), p.vmask))
            self._wit[v] = (tuple(packed), res.exhaustive)
        return self._wit[v]

    def planar_deletion(self) -> int | None:
        """A vertex whose removal leaves a planar graph, if any: the
        witness lemmas only speak about graphs with none."""
        for v in range(self.g.n):
            if is_planar(self.g.delete_vertex(v)):
                return v
        return None

    def unique_record(self) -> TwoCutRecord | None:
        if self.label in _UNIQUE_LABELS and len(self.basics) == 1:
            return self.basics[0]
        return None


# -- the individual checks -------------------------------------------------


def _check_min_degree(ctx: _Context) -> CheckRow:
    d = min_degree(ctx.g)
    status = PASS if d >= 3 else FAIL
    return CheckRow("min_degree_3", status, f"delta={d}")


def _check_two_components(ctx: _Context) -> CheckRow:
    if not ctx.cuts:
        return CheckRow("two_components", PASS, "vacuous: no two-cuts")
    bad = [
        tuple(sorted(c.cut))
        for c in ctx.cuts
        if len(c.components) != 2
    ]
    if bad:
        return CheckRow(
            "two_components", FAIL, f"cuts with component count != 2: {bad}"
        )
    return CheckRow(
        "two_components", PASS, f"{len(ctx.cuts)} two-cuts, each leaves 2 components"
    )


def _check_augment_nonplanar(ctx: _Context) -> CheckRow:
    if not ctx.cuts:
        return CheckRow("augment_nonplanar", PASS, "vacuous: no two-cuts")
    checked = 0
    for cut in ctx.cuts:
        a, b = sorted(cut.cut)
        for side in cut.components:
            checked += 1
            if is_planar(_augment(ctx.g, mask_of(side), a, b)):
                return CheckRow(
                    "augment_nonplanar",
                    FAIL,
                    f"cut ({a},{b}): side of size {len(side)} augments planar",
                )
    return CheckRow(
        "augment_nonplanar", PASS, f"{checked} augmented sides, all nonplanar"
    )


def _check_light_iso(ctx: _Context) -> CheckRow:
    if ctx.conn != 2 or not ctx.basics:
        return CheckRow("light_iso", PASS, "vacuous: connectivity != 2")
    kinds = [rec.light_aug_kind for rec in ctx.basics]
    bad = [
        (rec.cut, kind)
        for rec, kind in zip(ctx.basics, kinds)
        if kind not in ("K5", "K33", "K33e")
    ]
    if bad:
        return CheckRow("light_iso", FAIL, f"unrecognized light kinds: {bad}")
    return CheckRow(
        "light_iso",
        PASS,
        f"{len(kinds)} basic cuts, light kinds {sorted(set(kinds))}",
    )


def _check_witness_overlap(ctx: _Context) -> CheckRow:
    v = ctx.planar_deletion()
    if v is not None:
        return CheckRow(
            "witness_overlap", PASS, f"vacuous: deleting vertex {v} leaves planar"
        )
    n = ctx.g.n
    exhaustive = True
    # pairwise: any two subdivisions avoiding different vertices share
    # a vertex
    pairs = 0
    for u in range(n):
        wu, ex_u = ctx.witnesses(u)
        exhaustive = exhaustive and ex_u
        for v in range(u + 1, n):
            wv, ex_v = ctx.witnesses(v)
            exhaustive = exhaustive and ex_v
            for a in wu:
                for b in wv:
                    if pairs >= ctx.cap * n * (n - 1) // 2:
                        exhaustive = False
                        break
                    pairs += 1
                    if not a.vmask & b.vmask:
                        return CheckRow(
                            "witness_overlap",
                            FAIL,
                            f"disjoint witnesses avoiding {u} and {v}",
                        )
                else:
                    continue
                break
    # sampled triples: when three witnesses share no common vertex,
    # their edges must cover the graph and private vertices must be
    # branch vertices
    all_edges = frozenset(ctx.g.edges())
    triples = met = 0
    triple_exhaustive = True
    for u in range(n):
        wu, _ = ctx.witnesses(u)
        if len(wu) > _TRIPLE_CHOICES:
            triple_exhaustive = False
        for v in range(u + 1, n):
            wv, _ = ctx.witnesses(v)
            if len(wv) > _TRIPLE_CHOICES:
                triple_exhaustive = False
            for w in range(v + 1, n):
                ww, _ = ctx.witnesses(w)
                if len(ww) > _TRIPLE_CHOICES:
                    triple_exhaustive = False
                for a in wu[:_TRIPLE_CHOICES]:
                    for b in wv[:_TRIPLE_CHOICES]:
                        for c in ww[:_TRIPLE_CHOICES]:
                            triples += 1
                            if a.vmask & b.vmask & c.vmask:
                                continue
                            met += 1
                            if all_edges - a.edges - b.edges - c.edges:
                                return CheckRow(
                                    "witness_overlap",
                                    FAIL,
                                    f"empty triple meet at ({u},{v},{w}) "
                                    "but edges uncovered",
                                )
                            for first, others in (
                                (a, (b, c)),
                                (b, (a, c)),
                                (c, (a, b)),
                            ):
                                private = first.vmask & ~(
                                    others[0].vmask | others[1].vmask
                                )
                                if private & ~first.bmask:
                                    return CheckRow(
                                        "witness_overlap",
                                        FAIL,
                                        f"private non-branch vertex at "
                                        f"({u},{v},{w})",
                                    )
    status = PASS if exhaustive and triple_exhaustive else TRUNCATED
    return CheckRow(
        "witness_overlap",
        status,
        f"{pairs} pairs disjoint-free; {triples} triples sampled, "
        f"{met} with empty meet",
    )


def _check_edge_cover(ctx: _Context) -> CheckRow:
    if ctx.conn != 2 or not ctx.basics:
        return CheckRow("edge_cover", PASS, "vacuous: connectivity != 2")
    v = ctx.planar_deletion()
    if v is not None:
        return CheckRow(
            "edge_cover", PASS, f"vacuous: deleting vertex {v} leaves planar"
        )
    exhaustive = True
    pairs_total = 0
    for rec in ctx.basics:
        a, b = rec.cut
        heavy_edges = frozenset(
            e for e in ctx.g.edges() if e[0] in rec.heavy and e[1] in rec.heavy
        )
        wa, ex_a = ctx.witnesses(a)
        wb, ex_b = ctx.witnesses(b)
        exhaustive = exhaustive and ex_a and ex_b
        pairs = 0
        for ha in wa:
            for hb in wb:
                if pairs >= ctx.cap:
                    exhaustive = False
                    break
                pairs += 1
                missing = heavy_edges - ha.edges - hb.edges
                if missing:
                    return CheckRow(
                        "edge_cover",
                        FAIL,
                        f"cut {rec.cut}: heavy edge {sorted(missing)[0]} "
                        "outside both witnesses",
                    )
            else:
                continue
            break
        pairs_total += pairs
    status = PASS if exhaustive else TRUNCATED
    return CheckRow(
        "edge_cover",
        status,
        f"{pairs_total} witness pairs over {len(ctx.basics)} basic cuts",
    )


def _check_unique_cut_structure(ctx: _Context) -> CheckRow:
    rec = ctx.unique_record()
    if rec is None:
        return CheckRow(
            "unique_cut_structure", PASS, "vacuous: not the unique-cut shape"
        )
    g = ctx.g
    a, b = rec.cut
    if g.has_edge(a, b):
        return CheckRow(
            "unique_cut_structure", FAIL, f"cut pair ({a},{b}) is an edge"
        )
    wa, ex_a = ctx.witnesses(a)
    wb, ex_b = ctx.witnesses(b)
    exhaustive = ex_a and ex_b
    for w, other, who in ((wa, b, "a"), (wb, a, "b")):
        for item in w:
            if not item.vmask >> other & 1:
                return CheckRow(
                    "unique_cut_structure",
                    FAIL,
                    f"witness avoiding {who} misses the other cut vertex",
                )
    # every edge lies on the light side (joints included) or in one of
    # the two witnesses
    light_mask = mask_of(rec.light) | 1 << a | 1 << b
    outside = frozenset(
        e
        for e in g.edges()
        if not (light_mask >> e[0] & 1 and light_mask >> e[1] & 1)
    )
    pairs = 0
    for ha in wa:
        for hb in wb:
            if pairs >= ctx.cap:
                exhaustive = False
                break
            pairs += 1
            missing = outside - ha.edges - hb.edges
            if missing:
                return CheckRow(
                    "unique_cut_structure",
                    FAIL,
                    f"edge {sorted(missing)[0]} outside light side and "
                    "both witnesses",
                )
        else:
            continue
        break
    # two-cuts of the heavy side plus joints that separate the joints
    # never induce an edge
    keep = sorted(rec.heavy | {a, b})
    pos = {v: i for i, v in enumerate(keep)}
    j = g.subgraph(mask_of(keep))
    ja, jb = pos[a], pos[b]
    separating = []
    full = (1 << j.n) - 1
    for u in range(j.n):
        for v in range(u + 1, j.n):
            if ja in (u, v) or jb in (u, v):
                continue
            comps = component_masks(j.adj, full & ~(1 << u) & ~(1 << v))
            if len(comps) < 2:
                continue
            in_a = [c for c in comps if c >> ja & 1]
            in_b = [c for c in comps if c >> jb & 1]
            if in_a and in_b and in_a[0] != in_b[0]:
                separating.append((u, v))
                if j.has_edge(u, v):
                    return CheckRow(
                        "unique_cut_structure",
                        FAIL,
                        f"separating pair {(keep[u], keep[v])} induces an edge",
                    )
    status = PASS if exhaustive else TRUNCATED
    return CheckRow(
        "unique_cut_structure",
        status,
        f"no cut edge; containment over {len(wa)}+{len(wb)} witnesses, "
        f"{pairs} pairs; {len(separating)} separating pairs edge-free",
    )


def _check_basic_lemma(ctx: _Context) -> CheckRow:
    rec = ctx.unique_record()
    if rec is None:
        return CheckRow("basic_lemma", PASS, "vacuous: not the unique-cut shape")
    g = ctx.g
    a, b = rec.cut
    keep = sorted(rec.heavy | {a, b})
    pos = {v: i for i, v in enumerate(keep)}
    j = g.subgraph(mask_of(keep))
    ja, jb = pos[a], pos[b]
    for e in j.edges():
        u, v = e
        deleted = delete_edge(j, e)
        if not (
            is_planar(deleted.delete_vertex(ja))
            or is_planar(deleted.delete_vertex(jb))
        ):
            return CheckRow(
                "basic_lemma",
                FAIL,
                f"deleting edge {(keep[u], keep[v])} leaves both joint "
                "deletions nonplanar",
            )
        for joint in (ja, jb):
            if joint in e:
                # removing the merged vertex removes both endpoints
                shrunk = j.delete_vertex(max(e)).delete_vertex(min(e))
            else:
                c = contract_edge(j, e)
                shrunk = c.delete_vertex(joint if joint < max(e) else joint - 1)
            if is_planar(shrunk):
                break
        else:
            return CheckRow(
                "basic_lemma",
                FAIL,
                f"contracting edge {(keep[u], keep[v])} leaves both joint "
                "deletions nonplanar",
            )
    return CheckRow(
        "basic_lemma", PASS, f"{j.m} edges of the joint side, all recoverable"
    )


def _check_branch_vertices(ctx: _Context) -> CheckRow:
    rec = ctx.unique_record()
    if rec is None:
        return CheckRow(
            "branch_vertices", PASS, "vacuous: not the unique-cut shape"
        )
    a, b = rec.cut
    wa, ex_a = ctx.witnesses(a)
    wb, ex_b = ctx.witnesses(b)
    for w, other, who in ((wa, b, "a"), (wb, a, "b")):
        for item in w:
            if not item.bmask >> other & 1:
                return CheckRow(
                    "branch_vertices",
                    FAIL,
                    f"witness avoiding {who}: other joint not a branch vertex",
                )
    status = PASS if ex_a and ex_b else TRUNCATED
    return CheckRow(
        "branch_vertices",
        status,
        f"{len(wa)}+{len(wb)} witnesses, joint always a branch vertex",
    )


def _check_branch_cover(ctx: _Context) -> CheckRow:
    rec = ctx.unique_record()
    if rec is None:
        return CheckRow("branch_cover", PASS, "vacuous: not the unique-cut shape")
    a, b = rec.cut
    target = mask_of(rec.heavy) | 1 << a | 1 << b
    wa, ex_a = ctx.witnesses(a)
    wb, ex_b = ctx.witnesses(b)
    exhaustive = ex_a and ex_b
    if not wa or not wb:
        return CheckRow("branch_cover", FAIL, "a side has no witnesses")
    # walk pairs smallest combined edge count first, the order in which
    # a cover is expected soonest
    heap = [(len(wa[0].edges) + len(wb[0].edges), 0, 0)]
    seen = {(0, 0)}
    popped = 0
    while heap:
        if popped >= ctx.cap:
            exhaustive = False
            break
        _, i, k = heapq.heappop(heap)
        popped += 1
        if not target & ~(wa[i].bmask | wb[k].bmask):
            return CheckRow(
                "branch_cover",
                PASS,
                f"cover found at pair {popped} "
                f"(edges {len(wa[i].edges)}+{len(wb[k].edges)})",
            )
        for ni, nk in ((i + 1, k), (i, k + 1)):
            if ni < len(wa) and nk < len(wb) and (ni, nk) not in seen:
                seen.add((ni, nk))
                heapq.heappush(
                    heap,
                    (len(wa[ni].edges) + len(wb[nk].edges), ni, nk),
                )
    if exhaustive:
        return CheckRow(
            "branch_cover", FAIL, f"no covering pair among all {popped} pairs"
        )
    return CheckRow(
        "branch_cover", TRUNCATED, f"no cover in first {popped} pairs"
    )


def _check_nonbranch_degree(ctx: _Context) -> CheckRow:
    rec = ctx.unique_record()
    if rec is None:
        return CheckRow(
            "nonbranch_degree", PASS, "vacuous: not the unique-cut shape"
        )
    g = ctx.g
    a, b = rec.cut
    heavy_mask = mask_of(rec.heavy)
    wa, ex_a = ctx.witnesses(a)
    wb, ex_b = ctx.witnesses(b)
    exhaustive = ex_a and ex_b
    pairs = shared_cases = 0
    for ha in wa:
        for hb in wb:
            if pairs >= ctx.cap:
                exhaustive = False
                break
            pairs += 1
            both = ha.vmask & hb.vmask & heavy_mask
            nonbranch = both & ~(ha.bmask | hb.bmask)
            for w in bits(nonbranch):
                shared_cases += 1
                if (
                    g.degree(w) != 4
                    or ha.incidence[w] != 2
                    or hb.incidence[w] != 2
                ):
                    return CheckRow(
                        "nonbranch_degree",
                        FAIL,
                        f"shared non-branch vertex {w}: degree "
                        f"{g.degree(w)}, witness incidences "
                        f"{ha.incidence[w]}/{hb.incidence[w]}",
                    )
        else:
            continue
        break
    status = PASS if exhaustive else TRUNCATED
    return CheckRow(
        "nonbranch_degree",
        status,
        f"{shared_cases} shared non-branch cases over {pairs} pairs",
    )


_CHECKS = (
    _check_min_degree,
    _check_two_components,
    _check_augment_nonplanar,
    _check_light_iso,
    _check_witness_overlap,
    _check_edge_cover,
    _check_unique_cut_structure,
    _check_basic_lemma,
    _check_branch_vertices,
    _check_branch_cover,
    _check_nonbranch_degree,
)


def audit_graph(g: Graph, cap: int = 10000) -> AuditReport:
    """Run all eleven checks.  Deterministic: same graph and cap, same
    report."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    ctx = _Context(g, cap)
    rows = tuple(check(ctx) for check in _CHECKS)
    assert tuple(r.name for r in rows) == CHECK_NAMES
    return AuditReport(canonical_form(g).canon_g6, rows)
