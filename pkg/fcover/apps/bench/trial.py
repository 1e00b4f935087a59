# -*- coding: utf-8 -*-

from dataclasses import dataclass
from time import perf_counter
from typing import Any, Dict, Optional

import numpy as np

from fcover.arguments import CMD_BFC, CMD_BINARY, CMD_RANDOM, CMD_ROUND
from fcover.bfc.pipeline import BfcSolution, bfc_6approx, check_bfc_solution
from fcover.errors import InvalidForestError, UsageError
from fcover.exact.bfc import exact_bfc
from fcover.exact.budget import BFC_BUDGET, FC_BUDGET
from fcover.exact.fc import exact_fc
from fcover.fc.binary import forest_cover_binary
from fcover.fc.randomized import randomized_fc
from fcover.fc.result import FcResult
from fcover.fc.rounding import lp_rounding_fc
from fcover.generators import GeneratorParams, generate
from fcover.graph.core import EPSILON, Graph, GraphMode
from fcover.graph.forest import is_forest_cover
from fcover.lp import create_backend

Row = Dict[str, Any]


@dataclass(frozen=True)
class TrialSpec:
    index: int
    seed: int
    kind: str
    params: GeneratorParams
    method: str
    epsilon: float
    lam: float
    max_experiments: int
    tol: float
    max_iterations: Optional[int]
    backend: str
    fixed_point: bool
    oracle: bool

    def _seed_words(self) -> np.ndarray:
        return np.random.SeedSequence([self.seed, self.index]).generate_state(2)

    def instance_seed(self) -> int:
        return int(self._seed_words()[0])

    def algorithm_seed(self) -> int:
        """Seed of the randomized solver for this trial, independent of the instance"""
        return int(self._seed_words()[1])


def _ratio(value: float, bound: Optional[float]) -> Optional[float]:
    if bound is None or bound <= EPSILON:
        return None
    return value / bound


def _solve_fc(spec: TrialSpec, graph: Graph) -> FcResult:
    if spec.method == CMD_BINARY:
        return forest_cover_binary(graph)[0]
    if spec.method == CMD_RANDOM:
        return randomized_fc(
            graph, spec.epsilon, spec.algorithm_seed(), spec.max_experiments
        )
    if spec.method == CMD_ROUND:
        return lp_rounding_fc(
            graph,
            fixed_point_pruning=spec.fixed_point,
            tol=spec.tol,
            max_iterations=spec.max_iterations,
            backend=create_backend(spec.backend),
        )
    raise UsageError(f"Unknown bench method: {spec.method}")


def _fc_row(spec: TrialSpec, graph: Graph) -> Row:
    result = _solve_fc(spec, graph)
    optimum = None
    if spec.oracle and graph.mode == GraphMode.FC and FC_BUDGET.fits(graph):
        optimum = exact_fc(graph)[1]
    return {
        "value": result.wi,
        "lower_bound": result.lower_bound,
        "optimum": optimum,
        "ratio_bound": result.ratio(),
        "feasible": is_forest_cover(graph, result.forest),
    }


def _bfc_feasible(graph: Graph, solution: BfcSolution) -> bool:
    try:
        check_bfc_solution(graph, solution)
    except InvalidForestError:
        return False
    return True


def _bfc_row(spec: TrialSpec, graph: Graph) -> Row:
    solution = bfc_6approx(
        graph,
        spec.lam,
        fixed_point_pruning=spec.fixed_point,
        tol=spec.tol,
        max_iterations=spec.max_iterations,
        backend=create_backend(spec.backend),
    )
    optimum = None
    if spec.oracle and BFC_BUDGET.fits(graph):
        optimum = float(exact_bfc(graph, spec.lam)[1])
    return {
        "value": float(solution.count),
        "lower_bound": None,
        "optimum": optimum,
        "ratio_bound": None,
        "feasible": _bfc_feasible(graph, solution),
    }


def run_trial(spec: TrialSpec) -> Row:
    """Generate one instance, solve it and compare against the optimum if small"""
    instance_seed = spec.instance_seed()
    graph = generate(spec.kind, spec.params, instance_seed)

    started = perf_counter()
    if spec.method == CMD_BFC:
        row = _bfc_row(spec, graph)
    else:
        row = _fc_row(spec, graph)
    seconds = perf_counter() - started

    row.update(
        {
            "trial": spec.index,
            "seed": instance_seed,
            "algorithm_seed": spec.algorithm_seed(),
            "n": graph.n,
            "m": graph.m,
            "ratio_opt": _ratio(row["value"], row["optimum"]),
            "seconds": seconds,
        }
    )
    return row
