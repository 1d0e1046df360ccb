"""Exact tools for checking circumference lower bounds on small graphs."""

from .errors import (
    CapacityError,
    DegenerateCircumferenceError,
    EdgeListError,
    Graph6Error,
    HypothesisError,
    SolverMismatchError,
)
from .exact_solvers import (
    SolveLimits,
    all_longest_cycle_vertex_sets,
    longest_cycle_length,
    longest_path_length,
    oracle_longest_cycle,
    oracle_longest_path,
    subset_table,
)
from .extremal import ExtremalParams, build_extremal, parameter_grid, predicted_invariants
from .graph_core import CycleSeq, Graph, PathSeq, min_degree, parse_edgelist, parse_graph6, remove_vertices, to_edgelist, to_graph6
from .spreading import Spreading, classify, enumerate_spreadings, find_minimal_spreadings, min_u0_via_matching, saturate

__version__ = "0.1.0"
