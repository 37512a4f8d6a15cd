"""Embedded golden data: six blocks, 133 graphs."""

import pytest

from apexkit.canon import canonical_form
from apexkit.catalog import (
    BLOCK_NAMES,
    BLOCK_SIZES,
    CatalogEntry,
    block,
    expected_census,
    load_catalog,
)

EXPECTED_SIZES = {
    "heavy-nonplanar": 21,
    "disjoint-cuts": 3,
    "multi-cuts-ge3": 14,
    "exactly-two-cuts": 23,
    "unique-cut-split": 33,
    "unique-cut-nosplit": 39,
}


def test_block_sizes():
    assert BLOCK_SIZES == EXPECTED_SIZES
    assert sum(BLOCK_SIZES.values()) == 133
    assert list(BLOCK_NAMES) == list(EXPECTED_SIZES)


def test_census_totals():
    census = expected_census()
    assert sum(census.values()) == 133
    assert census["HEAVY_NONPLANAR"] == 21
    assert census["UNIQUE_CUT_NOSPLIT"] == 39


def test_entries_decode_and_are_distinct():
    cat = load_catalog()
    assert len(cat) == 133
    certs = set()
    for entry in cat:
        g = entry.graph()
        assert 10 <= g.n <= 16
        certs.add(canonical_form(g).canon_g6)
    assert len(certs) == 133


def test_first_entries_frozen():
    cat = load_catalog()
    assert cat[0] == CatalogEntry(
        g6="I`KxuJBpw", figure="heavy-nonplanar", expected_class="HEAVY_NONPLANAR"
    )
    assert cat[0].graph().m == 23
    assert block("disjoint-cuts")[0].g6 == "IwC^F?^Fo"


def test_block_lookup_unknown_name():
    with pytest.raises(KeyError):
        block("no-such-block")


def test_figure_and_class_pair_up():
    for entry in load_catalog():
        assert entry.figure.replace("-", "_").upper() == entry.expected_class
