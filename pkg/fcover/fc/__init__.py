# -*- coding: utf-8 -*-

from fcover.fc.binary import forest_cover_binary, split_by_weight
from fcover.fc.dual import DualCertificate, check_dual_feasibility
from fcover.fc.randomized import (
    DEFAULT_MAX_EXPERIMENTS,
    ExperimentOutcome,
    experiment_count,
    randomized_fc,
    run_experiment,
)
from fcover.fc.result import (
    METHOD_BINARY,
    METHOD_EXACT,
    METHOD_RANDOM,
    METHOD_ROUND,
    FcResult,
    primal_vectors,
)
from fcover.fc.rounding import lp_rounding_fc, round_solution

__all__ = [
    "DEFAULT_MAX_EXPERIMENTS",
    "DualCertificate",
    "ExperimentOutcome",
    "FcResult",
    "METHOD_BINARY",
    "METHOD_EXACT",
    "METHOD_RANDOM",
    "METHOD_ROUND",
    "check_dual_feasibility",
    "experiment_count",
    "forest_cover_binary",
    "lp_rounding_fc",
    "primal_vectors",
    "randomized_fc",
    "round_solution",
    "run_experiment",
    "split_by_weight",
]
