"""Exact dyadic graph invariant computed by three independent formulas."""

from .colorings import chi3, chi3_bruteforce
from .graphs import (
    Graph,
    GraphFormatError,
    UnsupportedSizeError,
    cut_size,
    degree_in,
    encode_graph6,
    induced_subgraph,
    is_eulerian_induced,
    parse_edge_list,
    parse_graph6,
    spanning_subgraph,
)
from .gf2 import (
    Gf2Matrix,
    Gf2Vector,
    adjacency_matrix,
    corank,
    kernel_count,
    mat_vec,
    rank,
    support,
    zero_set,
)
from .invariants import (
    BudgetExceededError,
    DyadicRational,
    InvariantValue,
    constrained_vector_count,
    even_set,
    parity_witness,
    phi_definition,
    phi_eulerian,
    psi_corank,
)
from .verify import (
    RunConfig,
    RunSummary,
    VerificationReport,
    enumerate_labeled_graphs,
    iter_reports,
    random_graph,
    run,
    verify_graph,
)

__all__ = [
    "Graph",
    "GraphFormatError",
    "UnsupportedSizeError",
    "parse_graph6",
    "encode_graph6",
    "parse_edge_list",
    "induced_subgraph",
    "spanning_subgraph",
    "cut_size",
    "degree_in",
    "is_eulerian_induced",
    "Gf2Matrix",
    "Gf2Vector",
    "adjacency_matrix",
    "rank",
    "corank",
    "kernel_count",
    "mat_vec",
    "support",
    "zero_set",
    "chi3",
    "chi3_bruteforce",
    "BudgetExceededError",
    "DyadicRational",
    "InvariantValue",
    "phi_definition",
    "phi_eulerian",
    "psi_corank",
    "constrained_vector_count",
    "parity_witness",
    "even_set",
    "RunConfig",
    "RunSummary",
    "VerificationReport",
    "enumerate_labeled_graphs",
    "random_graph",
    "verify_graph",
    "iter_reports",
    "run",
]

__version__ = "0.1.0"
