"""Library for verifying, classifying, auditing and re-discovering the
minor-minimal non-apex graphs of connectivity two."""

from .apex import (
    ObstructionCertificate,
    ObstructionFailure,
    apex_set,
    first_apex,
    is_obstruction,
)
from .audit import AuditReport, CheckRow, CHECK_NAMES, audit_graph
from .canon import (
    CanonicalForm,
    are_isomorphic,
    automorphism_generators,
    canonical_form,
    canonical_graph,
    dedup_canonical,
    vertex_orbits,
)
from .catalog import (
    BLOCK_NAMES,
    CatalogEntry,
    block,
    expected_census,
    load_catalog,
)
from .graphs import (
    Graph,
    CutPartition,
    components,
    connectivity,
    contract_edge,
    decode_graph6,
    delete_edge,
    encode_graph6,
    enumerate_two_cuts,
    min_degree,
)
from .minors import PATTERNS, has_minor, minor_closed_check
from .planarity import (
    KuratowskiWitness,
    WitnessEnumeration,
    enumerate_witnesses,
    is_planar,
    kuratowski_avoiding,
    kuratowski_witness,
    validate_witness,
)
from .search import (
    SearchConfig,
    SearchResult,
    disconnected_search,
    generate_connected_planar,
    generate_planar,
    heavy_nonplanar_search,
    unique_cut_search,
    verify_catalog,
)
from .structure import (
    CLASS_LABELS,
    Class5,
    TwoCutRecord,
    analyze_cut,
    basic_cuts,
    classify,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "BLOCK_NAMES",
    "CHECK_NAMES",
    "CLASS_LABELS",
    "CanonicalForm",
    "CatalogEntry",
    "CheckRow",
    "Class5",
    "CutPartition",
    "Graph",
    "KuratowskiWitness",
    "ObstructionCertificate",
    "ObstructionFailure",
    "PATTERNS",
    "SearchConfig",
    "SearchResult",
    "TwoCutRecord",
    "WitnessEnumeration",
    "analyze_cut",
    "apex_set",
    "are_isomorphic",
    "audit_graph",
    "automorphism_generators",
    "basic_cuts",
    "block",
    "canonical_form",
    "canonical_graph",
    "classify",
    "components",
    "connectivity",
    "contract_edge",
    "decode_graph6",
    "dedup_canonical",
    "delete_edge",
    "disconnected_search",
    "encode_graph6",
    "enumerate_two_cuts",
    "enumerate_witnesses",
    "expected_census",
    "first_apex",
    "generate_connected_planar",
    "generate_planar",
    "has_minor",
    "heavy_nonplanar_search",
    "is_obstruction",
    "is_planar",
    "kuratowski_avoiding",
    "kuratowski_witness",
    "load_catalog",
    "min_degree",
    "minor_closed_check",
    "unique_cut_search",
    "validate_witness",
    "verify_catalog",
    "vertex_orbits",
    "__version__",
]
