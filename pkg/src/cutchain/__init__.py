"""cutchain: decide cutwidth <= 2 and certify it with chains of cycles.

A graph has cutwidth at most 2 exactly when it is a subgraph of a chain
of cycles.  This package decides the question, emits independently
verifiable certificates for both directions, and embeds width-2 trees
into caterpillar subdivisions.
"""

from .caterpillar import (
    GnGraph,
    OpenedChain,
    is_homeomorphic_to_gn,
    is_tree,
    make_gn,
    open_chain,
    pad_to_gn,
    tree_to_gn,
)
from .certificates import (
    Certificate,
    CertificateFormatError,
    certificate_from_document,
    certificate_to_document,
    certify,
    from_json,
    to_json,
    verify_certificate,
)
from .chains import (
    ChainError,
    ChainOfCycles,
    ComponentPart,
    Cycle,
    Embedding,
    assemble_components,
    build_chain,
    canonical_layout,
    random_chain,
    random_subgraph,
    underlying_graph,
    validate_chain,
    verify_embedding,
)
from .equivalence import EquivalenceReport, Failure, check_theorem_equivalence
from .graphs import (
    EdgeListError,
    Graph,
    PathOrCycleShape,
    ShapeKind,
    classify_path_or_cycle,
    connected_components,
    enumerate_labeled_graphs,
    induced_subgraph,
    is_connected,
    make_graph,
    parse_edge_list,
    random_graph,
    serialize_edge_list,
    smooth_degree2,
    subgraph_embedding_problems,
)
from .layouts import (
    CutwidthResult,
    LinearLayout,
    cut_profile,
    exact_cutwidth,
    find_width2_layout,
    layout_width,
    separating_vertices,
)
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CertificateFormatError",
    "ChainError",
    "ChainOfCycles",
    "ComponentPart",
    "CutwidthResult",
    "Cycle",
    "EdgeListError",
    "Embedding",
    "EquivalenceReport",
    "Failure",
    "GnGraph",
    "Graph",
    "LinearLayout",
    "OpenedChain",
    "PathOrCycleShape",
    "ShapeKind",
    "SplitMix64",
    "assemble_components",
    "build_chain",
    "canonical_layout",
    "certificate_from_document",
    "certificate_to_document",
    "certify",
    "check_theorem_equivalence",
    "classify_path_or_cycle",
    "connected_components",
    "cut_profile",
    "enumerate_labeled_graphs",
    "exact_cutwidth",
    "find_width2_layout",
    "from_json",
    "induced_subgraph",
    "is_connected",
    "is_homeomorphic_to_gn",
    "is_tree",
    "layout_width",
    "make_gn",
    "make_graph",
    "open_chain",
    "pad_to_gn",
    "parse_edge_list",
    "random_chain",
    "random_graph",
    "random_subgraph",
    "separating_vertices",
    "serialize_edge_list",
    "smooth_degree2",
    "subgraph_embedding_problems",
    "to_json",
    "tree_to_gn",
    "underlying_graph",
    "validate_chain",
    "verify_certificate",
    "verify_embedding",
]
