"""Temporal digraph cycle detection and acyclic temporization toolkit."""

from .core import (
    CycleKind,
    CycleWitness,
    Digraph,
    GraphFormatError,
    PathModel,
    PathWitness,
    TemporalDigraph,
    canonical_cycle,
    check_temporal_path,
    check_temporal_walk,
    check_witness,
    cycle_arcs,
    enumerate_cycles,
    girth,
    greedy_departure_times,
    greedy_path_times,
    parse_digraph,
    parse_temporal_digraph,
    simplify_walk,
)
from .detect import (
    BudgetExceeded,
    ExplorationStats,
    RootSearchStats,
    detect_simple,
    detect_strong,
    detect_weak,
    extend,
)
from .oracle import (
    CycleClassification,
    OracleCapError,
    all_pairs_reachability,
    classify_cycle,
    detect_all_kinds,
    oracle_detect,
    oracle_reachability,
)
from .randgen import random_cnf, random_digraph, random_temporal_digraph
from .reach import ReachResult, earliest_arrival, latest_departure
from .reduce import (
    CnfFormatError,
    CnfFormula,
    NaeInstance,
    SatMode,
    StrongInstance,
    assignment_to_strong_cycle,
    assignment_to_temporization,
    auxiliary_cycle,
    l_circ,
    nae_to_simple_instance,
    nae_to_weak_instance,
    parse_dimacs,
    sat_to_strong_instance,
    satisfies,
    solve_formula,
)
from .temporize import (
    DecisionStatus,
    Temporization,
    TemporizationDecision,
    acyclic_temporization,
    bounded_lifetime_search,
    check_alternation_conditions,
    lexicographic_temporization,
    parse_temporization,
    strict_acyclic_temporization,
    strong_acyclic_temporization,
)

__version__ = "0.1.0"
