"""Random links from random walks on braid groups.

The closure of a braid on ``n`` strands has one component per cycle of the
permutation the braid induces, so component counts and strand partitions of
random links reduce to cycle statistics on the symmetric group.
"""

from randlinks._accel import USE_NUMBA
from randlinks.braid import BraidWord, closure_components, closure_partition, project
from randlinks.errors import FalsificationError, ResourceLimitError
from randlinks.exact import (
    component_distribution,
    erdos_check,
    expected_components_exact,
    hammersley_h,
    harmonic,
    most_expected_components,
    stirling_row,
)
from randlinks.partition import (
    Partition,
    centralizer_order,
    conjugacy_class_size,
    enumerate_partitions,
    knot_probability,
    most_expected_partition,
    verify_lemma,
)
from randlinks.perm import (
    Permutation,
    compose,
    cycle_decomposition,
    cycle_type,
    identity,
    inverse,
    num_cycles,
)
from randlinks.walk import (
    StepDistribution,
    WalkConfig,
    convergence_curve,
    monte_carlo,
    run_walk,
    tv_distance_components,
    tv_distance_uniform,
)

__version__ = "0.1.0"

__all__ = [
    "USE_NUMBA",
    "BraidWord",
    "FalsificationError",
    "Partition",
    "Permutation",
    "ResourceLimitError",
    "StepDistribution",
    "WalkConfig",
    "centralizer_order",
    "closure_components",
    "closure_partition",
    "component_distribution",
    "compose",
    "conjugacy_class_size",
    "convergence_curve",
    "cycle_decomposition",
    "cycle_type",
    "enumerate_partitions",
    "erdos_check",
    "expected_components_exact",
    "hammersley_h",
    "harmonic",
    "identity",
    "inverse",
    "knot_probability",
    "monte_carlo",
    "most_expected_components",
    "most_expected_partition",
    "num_cycles",
    "project",
    "run_walk",
    "stirling_row",
    "tv_distance_components",
    "tv_distance_uniform",
    "verify_lemma",
]
