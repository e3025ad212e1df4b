"""Symmetry-based parameter tying for multi-angle QAOA on Max-Cut."""

from .graphs import (
    CutValue,
    Graph,
    encode_graph6,
    exact_max_cut,
    graph_from_edges,
    make_family,
    parse_graph6,
    read_graph6_file,
)
from .metrics import approx_ratio, k_ratio, l_ratio
from .optimizer import ObjectiveSpec, OptResult, multistart_optimize, nelder_mead
from .simulator import (
    CircuitObjective,
    apply_cost_layer,
    apply_mixer_layer,
    expectation,
    initial_state,
    run_circuit,
)
from .symmetry import (
    OrbitPartition,
    automorphism_group,
    distinct_orbit_partitions,
    generator_set,
    is_automorphism,
    orbits_of,
)
from .tying import ParameterTying, expand, tie_from_partition, tie_ma, tie_plain, tie_random

__version__ = "0.1.0"

__all__ = [
    "CutValue",
    "Graph",
    "encode_graph6",
    "exact_max_cut",
    "graph_from_edges",
    "make_family",
    "parse_graph6",
    "read_graph6_file",
    "approx_ratio",
    "k_ratio",
    "l_ratio",
    "ObjectiveSpec",
    "OptResult",
    "multistart_optimize",
    "nelder_mead",
    "CircuitObjective",
    "apply_cost_layer",
    "apply_mixer_layer",
    "expectation",
    "initial_state",
    "run_circuit",
    "OrbitPartition",
    "automorphism_group",
    "distinct_orbit_partitions",
    "generator_set",
    "is_automorphism",
    "orbits_of",
    "ParameterTying",
    "expand",
    "tie_from_partition",
    "tie_ma",
    "tie_plain",
    "tie_random",
]
