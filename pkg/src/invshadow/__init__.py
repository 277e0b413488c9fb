"""Inverse-shadowing deciders and dynamical property meters on finite
metric systems: delta-transition graphs, level-set tube containment,
method-class deciders with certificates, and executable theorem suites.
"""

__version__ = "0.1.0"

from .deciders import (
    BI,
    CLASS_T0,
    CLASS_TC,
    CLASS_TH,
    FULL,
    INF,
    POSITIVE,
    Counterexample,
    ISQuery,
    ISVerdict,
    PointVerdict,
    counterexample_valid,
    decide_robust_IS,
    decide_T0_IS,
    decide_Th_IS,
    decide_weak_IS,
    enumerate_delta_bijections,
    max_tube_horizon,
    oracle_path_enum,
    robust_tube_ok,
    tube_ok,
)
from .graph import (
    BACKWARD,
    FORWARD,
    LevelSequence,
    TransitionGraph,
    build_graph,
    is_chain_transitive,
    is_pseudo_orbit,
    level_sequence,
    reachable_set,
    shadows,
)
from .metric import FiniteMetricSpace, validate_metric
from .properties import (
    PropertyReport,
    equicontinuity_modulus,
    eventual_sensitivity_modulus,
    expansivity_constant,
    measure_properties,
    minimality_defect,
    sensitivity_modulus,
)
from .systems import (
    OrbitTrace,
    SystemMap,
    ZOO_FAMILIES,
    make_zoo_system,
    orbit_trace,
    point_at_time,
)
from .theorems import THEOREM_IDS, TheoremSuiteResult, run_suites

__all__ = [name for name in dir() if not name.startswith("_")]
