"""Symmetric complete sum-free sets in Z_n.

Constructions, exhaustive ground truth, counting, and the downstream
applications (Cayley graphs, a three-element dioid quotient, and the
random sum-free process), all over exact integer bitmask arithmetic.
"""

from .applications import (
    CayleyGraph,
    GraphProperties,
    PartitionReport,
    ProcessConfig,
    SimulationReport,
    cayley_graph,
    dioid_partition,
    graph_properties,
    simulate_random_sumfree,
)
from .errors import (
    BudgetExceededError,
    ConstructionError,
    DomainError,
    ParameterError,
    SumfreeError,
)
from .interval_ap_family import (
    N_MIN,
    IntervalAPParameters,
    SizeLadder,
    build_small,
    bc_interval_check,
    component_sets,
    density_choice,
    gap_fill_check,
    nearest_density_set,
    size_ladder,
    smallest_set,
    solve_parameters,
)
from .search_oracle import (
    Catalog,
    DilationClass,
    MaxSumFreeCatalog,
    ProbeReport,
    brute_special,
    characterization_probe,
    exhaustive_max_sum_free,
    exhaustive_scsf,
)
from .special_sets import (
    GCache,
    PredictedCount,
    SpecialEnumeration,
    enumerate_special,
    g_value,
    is_t_special,
    iter_lower_bound_family,
    lower_bound_family,
    predicted_scsf_count,
)
from .st_family import (
    EquivalenceReport,
    STParameters,
    TCandidate,
    build_st,
    st_completeness_condition,
    st_sum_free_condition,
    verify_st_equivalence,
)
from .zn_core import (
    CyclicSet,
    SetProperties,
    canonical_dilation_class,
    classify,
    dilate,
    dilation_orbit,
    half_range_complete,
    half_range_sum_free,
    interval,
    is_complete,
    is_sum_free,
    is_symmetric,
    negate,
    set_from_json,
    set_to_json,
    sumset,
    sumset_power,
    units,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Catalog",
    "CayleyGraph",
    "ConstructionError",
    "CyclicSet",
    "DilationClass",
    "DomainError",
    "EquivalenceReport",
    "GCache",
    "GraphProperties",
    "IntervalAPParameters",
    "MaxSumFreeCatalog",
    "N_MIN",
    "ParameterError",
    "PartitionReport",
    "PredictedCount",
    "ProbeReport",
    "ProcessConfig",
    "STParameters",
    "SetProperties",
    "SimulationReport",
    "SizeLadder",
    "SpecialEnumeration",
    "SumfreeError",
    "TCandidate",
    "bc_interval_check",
    "brute_special",
    "build_small",
    "build_st",
    "canonical_dilation_class",
    "cayley_graph",
    "characterization_probe",
    "classify",
    "component_sets",
    "density_choice",
    "dilate",
    "dilation_orbit",
    "dioid_partition",
    "enumerate_special",
    "exhaustive_max_sum_free",
    "exhaustive_scsf",
    "g_value",
    "gap_fill_check",
    "graph_properties",
    "interval",
    "half_range_complete",
    "half_range_sum_free",
    "is_complete",
    "is_sum_free",
    "is_symmetric",
    "is_t_special",
    "iter_lower_bound_family",
    "lower_bound_family",
    "nearest_density_set",
    "negate",
    "predicted_scsf_count",
    "set_from_json",
    "set_to_json",
    "simulate_random_sumfree",
    "size_ladder",
    "smallest_set",
    "solve_parameters",
    "st_completeness_condition",
    "st_sum_free_condition",
    "sumset",
    "sumset_power",
    "units",
    "verify_st_equivalence",
]
