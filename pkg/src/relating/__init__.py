"""Relating edges: for an edge ``xy``, is there an independent set ``S`` avoiding
both ends such that ``S + {x}`` and ``S + {y}`` are maximal independent sets?

``is_relating_poly`` answers in polynomial time on graphs with no 4- and no
6-cycles; ``is_relating_brute`` answers on any small graph; ``reduce`` turns a
CNF formula into an equivalent query on a graph with no 4- and 5-cycles.
"""

from .flow import FlowNetwork, FlowResult, max_flow
from .graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    build_graph,
    delete_edge,
    distance_layers,
    dominates,
    has_cycle_of_length,
    is_independent,
    is_maximal_independent,
    n_i,
    read_dimacs_graph,
    write_dimacs_graph,
)
from .oracle import (
    CapExceeded,
    RelatingWitness,
    enumerate_maximal_independent_sets,
    independence_number,
    is_relating_brute,
    is_well_covered,
    verify_relating_witness,
)
from .poly import (
    ForbiddenCycleDetected,
    NotC4C6Free,
    SideDecomposition,
    build_side_network,
    decompose_side,
    is_relating_poly,
    side_dominating_set,
)
from .reduction import (
    CnfFormula,
    ReductionArtifact,
    assignment_to_witness,
    brute_sat,
    normalize_cnf,
    parse_cnf,
    reduce,
    witness_to_assignment,
)

__version__ = "0.1.0"
