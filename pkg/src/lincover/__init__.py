"""Edge-disjoint linear cycle covers of mixed hypergraphs.

A linear path/cycle is a (cyclic) hyperedge sequence where consecutive
edges share exactly one vertex and nonconsecutive edges are disjoint.
This package constructs, for any hypergraph with edges of size 2 and 3, a
family of at most alpha(H) pairwise edge-disjoint linear cycles covering
every vertex (single vertices and single edges count as degenerate
cycles), and independently verifies such certificates.
"""

from .core import (
    Edge,
    Hypergraph,
    ParseError,
    add_edges,
    induced_sub,
    make_edge,
    parse_hypergraph,
    serialize_hypergraph,
)
from .cover import (
    CoverCertificate,
    InvariantViolation,
    RedEdgeSet,
    ReducedInstance,
    base_case,
    build_red_edges,
    certificate_from_json,
    certificate_to_json,
    lift,
    reduce,
    solve,
)
from .linear import (
    CycleViolation,
    LinearCycle,
    LinearPath,
    OrientedPath,
    PathViolation,
    initial_segment,
    orient_path,
    path_endpoints,
    validate_cycle,
    validate_path,
)
from .search import (
    BudgetExhausted,
    IndependentSet,
    SearchBudget,
    alpha,
    best_cycle_for_initial_segment,
    enumerate_linear_cycles,
    longest_linear_path,
    min_cycle_cover_oracle,
)
from .verify import CheckResult, VerificationReport, independent_alpha, verify

__version__ = "0.1.0"
