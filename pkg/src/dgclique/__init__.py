"""Enumeration of maximal (Delta, gamma)-cliques in temporal networks."""
from .clique_core import (
    Clique,
    Parameters,
    count_in_window,
    first_gamma_occurrence,
    is_delta_gamma_clique,
    is_maximal_def,
    last_gamma_occurrence,
)
from .enumerator import (
    RunStats,
    enumerate_maximal,
    left_expansion,
    right_expansion,
    vertex_expansions,
)
from .initializer import seed_cliques
from .oracle import GeneratorConfig, OracleBoundsError, brute_force_maximal, random_temporal_network
from .sweep import SweepConfig, SweepRow, run_sweep, select_maximum, write_outputs
from .temporal_graph import (
    EdgeDictionary,
    ParseError,
    TemporalEdge,
    TemporalNetwork,
    build_dictionary,
    candidate_vertices,
    infer_resolution,
    parse_edge_stream,
    read_edge_file,
)

__version__ = "0.1.0"
