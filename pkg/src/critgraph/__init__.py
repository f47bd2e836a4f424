"""critgraph: exhaustive generation, verification and certifying coloring
of k-vertex-critical (P5,dart)-free graphs."""

__version__ = "0.1.0"

from .canon import are_isomorphic, canonical_form, canonical_graph
from .coloring import chromatic_number, is_k_colorable, max_clique, verify_coloring
from .criticality import is_k_critical_family, is_k_vertex_critical
from .detect import (
    comparable_pair,
    find_induced,
    find_induced_antihole,
    find_induced_c5,
    is_family_free,
    is_homogeneous,
)
from .generate import GenConfig, GenResult, extend, generate_all
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .graphs import (
    Graph,
    antihole,
    complete,
    cycle,
    dart,
    diamond,
    from_edge_list,
    named_graph,
    path,
)

__all__ = [
    "Graph",
    "GenConfig",
    "GenResult",
    "antihole",
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "chromatic_number",
    "comparable_pair",
    "complete",
    "cycle",
    "dart",
    "diamond",
    "extend",
    "find_induced",
    "find_induced_antihole",
    "find_induced_c5",
    "from_edge_list",
    "generate_all",
    "graph6_decode",
    "graph6_encode",
    "is_family_free",
    "is_homogeneous",
    "is_k_colorable",
    "is_k_critical_family",
    "is_k_vertex_critical",
    "max_clique",
    "named_graph",
    "path",
    "verify_coloring",
]
