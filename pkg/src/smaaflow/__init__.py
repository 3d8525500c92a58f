"""Hierarchical fuzzy sorting with stochastic acceptability analysis.

The package sorts alternatives into ordered categories by comparing them
against limiting profiles through a weighted criteria hierarchy, handles
triangular-fuzzy evaluations, and quantifies the effect of imprecise
weights and data through Monte Carlo acceptability indices, overall and
per criterion at every level of the hierarchy.
"""

from .errors import (
    BoundaryViolation,
    InputError,
    InvariantError,
    SamplingError,
    SmaaFlowError,
)
from .flows import (
    Assignment,
    BatchEngine,
    FlowBundle,
    FlowTriple,
    ProfileSet,
    SingleCriterionFlows,
    alternative_flows,
    assign,
    assignments,
    flow_bundle,
    fuzzy_outranking,
    outranking_degree,
    profile_flows,
    single_criterion_assignment,
    single_criterion_flows,
    subtree_preference,
)
from .fuzzy import DEFUZZ_METHODS, TFN, TriangularFuzzyNumber
from .hierarchy import CriteriaTree, CriterionNode, WeightSpec, build_tree
from .model_io import (
    LinguisticScale,
    Problem,
    RunDefaults,
    dump_problem,
    fixture_path,
    load_problem,
    parse_problem,
    problem_to_document,
    write_report,
)
from .preference import PreferenceSpec, fuzzy_preference, preference_value
from .smaa import (
    AcceptabilityResult,
    PreferenceModel,
    StochasticValue,
    deterministic_result,
    iteration_rng,
    run_smaa,
    sample_profiles,
    sample_thresholds,
    sample_value,
    sample_weights_interval,
    sample_weights_missing,
    sample_weights_ordinal,
)

__version__ = "0.1.0"

__all__ = [
    "AcceptabilityResult",
    "Assignment",
    "BatchEngine",
    "BoundaryViolation",
    "CriteriaTree",
    "CriterionNode",
    "DEFUZZ_METHODS",
    "FlowBundle",
    "FlowTriple",
    "InputError",
    "InvariantError",
    "LinguisticScale",
    "PreferenceModel",
    "PreferenceSpec",
    "Problem",
    "ProfileSet",
    "RunDefaults",
    "SamplingError",
    "SingleCriterionFlows",
    "SmaaFlowError",
    "StochasticValue",
    "TFN",
    "TriangularFuzzyNumber",
    "WeightSpec",
    "alternative_flows",
    "assign",
    "assignments",
    "build_tree",
    "deterministic_result",
    "dump_problem",
    "fixture_path",
    "flow_bundle",
    "fuzzy_outranking",
    "fuzzy_preference",
    "iteration_rng",
    "load_problem",
    "outranking_degree",
    "parse_problem",
    "preference_value",
    "problem_to_document",
    "profile_flows",
    "run_smaa",
    "sample_profiles",
    "sample_thresholds",
    "sample_value",
    "sample_weights_interval",
    "sample_weights_missing",
    "sample_weights_ordinal",
    "single_criterion_assignment",
    "single_criterion_flows",
    "subtree_preference",
    "write_report",
]
