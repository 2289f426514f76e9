"""Fuzzy user-equilibrium traffic assignment via Physarum dynamics."""

from phyta._core import (
    ArithOp,
    AssignmentResult,
    FWConfig,
    FWResult,
    Link,
    Network,
    ODDemand,
    Path,
    PathReport,
    PhytaError,
    SolverConfig,
    SPConfig,
    TraceRow,
    TrapezoidalFuzzy,
    TriangularFuzzy,
    alpha_cut,
    beckmann_objective,
    bpr_cost,
    defuzzify_centroid,
    dis_numeric,
    dis_tri,
    enumerate_paths,
    fixture_names,
    fue_run,
    fuzzy_link_cost,
    fuzzy_path_cost,
    fw_solve,
    load_fixture,
    load_network,
    make_path,
    network_from_json,
    network_to_json,
    shortest_path,
    trap_arith,
    tri_add,
    tri_arith,
    tri_div,
    tri_mul,
    tri_sub,
)

__all__ = [
    "ArithOp",
    "AssignmentResult",
    "FWConfig",
    "FWResult",
    "Link",
    "Network",
    "ODDemand",
    "Path",
    "PathReport",
    "PhytaError",
    "SolverConfig",
    "SPConfig",
    "TraceRow",
    "TrapezoidalFuzzy",
    "TriangularFuzzy",
    "alpha_cut",
    "beckmann_objective",
    "bpr_cost",
    "defuzzify_centroid",
    "dis_numeric",
    "dis_tri",
    "enumerate_paths",
    "fixture_names",
    "fue_run",
    "fuzzy_link_cost",
    "fuzzy_path_cost",
    "fw_solve",
    "load_fixture",
    "load_network",
    "make_path",
    "network_from_json",
    "network_to_json",
    "shortest_path",
    "trap_arith",
    "tri_add",
    "tri_arith",
    "tri_div",
    "tri_mul",
    "tri_sub",
]

__version__ = "0.1.0"
