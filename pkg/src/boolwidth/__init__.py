"""Linear boolean-width toolkit.

Vertex orderings of a graph induce prefix cuts; the boolean dimension
of a cut is log2 of the number of distinct unions of neighborhoods
across it.  This package measures orderings, searches for good ones
(greedy heuristics and an exact subset DP), and runs (sigma, rho)
vertex-subset problems such as maximum induced matching on top of
them.

The cut kernels exist twice: a Cython extension and a pure-Python
fallback with identical semantics.  Selection is automatic at import;
set BOOLWIDTH_BACKEND=pure|compiled to force one side.
"""

from ._backend import HAVE_COMPILED, backend_name
from .bitset import VertexSet
from .cuts import (
    CutStats,
    NeighborhoodFamily,
    count_mis_bipartite,
    increment_un,
    twin_class_count,
    un_bruteforce,
    un_of_set,
    width_of_ordering,
)
from .decomposition import (
    LinearDecomposition,
    format_decomposition,
    read_decomposition,
    resolve_order,
    write_decomposition,
)
from .errors import (
    ParseError,
    PathDecompositionError,
    ScaleLimitError,
    TimeLimitExceeded,
)
from .exact import ExactResult, incremental_un_exact, lbw_dp_bruteforce, lbw_exact
from .graph import (
    Graph,
    PathDecomposition,
    connected_components,
    erdos_renyi,
    load_graph,
    order_from_path_decomposition,
    parse_dgf,
    parse_dimacs_col,
    write_dgf,
)
from .heuristics import HeuristicConfig, decompose_graph, generate_ordering, multi_start
from .rng import XorShift64Star
from .sigma_rho import (
    MembershipSet,
    SigmaRhoResult,
    SigmaRhoSpec,
    brute_force_sigma_rho,
    enumerate_classes,
    is_sigma_rho_set,
    nec_of_decomposition,
    preset,
    solve_sigma_rho,
)

__version__ = "0.1.0"

__all__ = [
    "CutStats",
    "ExactResult",
    "Graph",
    "HAVE_COMPILED",
    "HeuristicConfig",
    "LinearDecomposition",
    "MembershipSet",
    "NeighborhoodFamily",
    "ParseError",
    "PathDecomposition",
    "PathDecompositionError",
    "ScaleLimitError",
    "SigmaRhoResult",
    "SigmaRhoSpec",
    "TimeLimitExceeded",
    "VertexSet",
    "XorShift64Star",
    "backend_name",
    "brute_force_sigma_rho",
    "connected_components",
    "count_mis_bipartite",
    "decompose_graph",
    "enumerate_classes",
    "erdos_renyi",
    "format_decomposition",
    "generate_ordering",
    "increment_un",
    "incremental_un_exact",
    "is_sigma_rho_set",
    "lbw_dp_bruteforce",
    "lbw_exact",
    "load_graph",
    "multi_start",
    "nec_of_decomposition",
    "order_from_path_decomposition",
    "parse_dgf",
    "parse_dimacs_col",
    "preset",
    "read_decomposition",
    "resolve_order",
    "solve_sigma_rho",
    "twin_class_count",
    "un_bruteforce",
    "un_of_set",
    "width_of_ordering",
    "write_decomposition",
    "write_dgf",
]
