"""Constructive path and cycle odd-covers of graphs.

A path odd-cover of a graph G is a collection of paths on V(G) whose edge
sets XOR to E(G); covers may use nonedges, which is why far fewer paths are
needed than for edge-disjoint decompositions.  This package builds covers
meeting the degree bounds, exact minimum covers on small universes, and the
relaxations that allow subdividing G or adding isolated vertices.
"""

from .core import (
    EdgeVector,
    Graph,
    InternalInvariantError,
    OddCover,
    VerificationReport,
    degree_profile,
    lower_bound,
    max_subgraph_density,
    verify_cover,
    xor_edges,
)
from .cycles import (
    balanced_orientation,
    max_degree_cycle_cover,
    odd_matching,
    peel_cycle_layers,
)
from .families import (
    counterexample,
    cycles_on_path,
    disjoint_cycles,
    eulerian_random,
    generate,
    gnp,
    walecki_cycles,
)
from .io import emit_edge_list, parse_edge_list, parse_graph6, witness_json
from .oracle import (
    arboricity_density,
    bound_gap_scan,
    enumerate_cycles,
    enumerate_paths,
    exact_c2,
    exact_linear_arboricity,
    exact_linear_forests,
    exact_p2,
    exact_p2_iso,
)
from .solver import (
    SolveBudget,
    cover_eulerian_plus_matching,
    cover_first_bound,
    cycle_odd_cover,
    iso_cover_general,
    path_odd_cover,
    peel_odd_path,
    solve_budget,
)
from .systems import (
    ForestState,
    PathSystem,
    classify_endpoints,
    cycle_iso_cover,
    cycle_top_cover,
    insert,
    is_well_distributed,
    iso_cover_from_forests,
    join,
    meet,
    reduce_system,
    topological_cover,
    two_path_cover_la2,
)
from .twopaths import (
    ExceptionalCase,
    ExceptionalEndpointError,
    TwoPaths,
    choose_integrable_pair,
    cover_cycles,
    cover_cycles_with_endpoint,
    integrate_four_edges,
    integrate_one_edge,
    integrate_two_edges,
    is_exceptional_k4,
)

__version__ = "0.1.0"
