# -*- coding: utf-8 -*-

from dataclasses import dataclass
from math import ceil
from typing import Final, List, Optional, Tuple

import numpy as np

from fcover.errors import UsageError
from fcover.fc.binary import forest_cover_binary
from fcover.fc.result import METHOD_RANDOM, FcResult
from fcover.graph.core import EPSILON, Graph
from fcover.graph.forest import Forest, weighted_index
from fcover.logging.logging import logger

DEFAULT_MAX_EXPERIMENTS: Final[int] = 10000
GUARANTEE_PROVEN: Final[str] = "2+epsilon"
GUARANTEE_HEURISTIC: Final[str] = "heuristic"


@dataclass(frozen=True)
class ExperimentOutcome:
    index: int
    seed: int
    draws: Tuple[int, ...]
    """``W_e`` per edge id: 1 keeps the edge free in the binary instance"""
    forest: Forest
    objective: float
    """Weighted index under the binary weights ``1 - W_e``"""
    wi: float
    """Weighted index under the original weights"""
    dual_bound: float
    dual_sets: int


def check_epsilon(epsilon: float) -> None:
    if not (0.0 < epsilon <= 1.0):
        raise UsageError(f"epsilon must lie in (0, 1]: {epsilon}")


def experiment_count(n_edges: int, epsilon: float) -> int:
    """``ceil(n_edges / (2 delta^2))`` with ``delta = epsilon^2``, at least one"""
    check_epsilon(epsilon)
    delta = epsilon**2
    return max(1, ceil(n_edges / (2.0 * delta**2)))


def experiment_stream(seed: int, index: int) -> np.random.Generator:
    """Counter-based stream owned by one experiment of one seeded run"""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def draw_indicators(graph: Graph, seed: int, index: int) -> Tuple[int, ...]:
    uniforms = experiment_stream(seed, index).random(graph.m)
    return tuple(int(uniforms[e.id] < 1.0 - e.w) for e in graph.edges)


def run_experiment(graph: Graph, seed: int, index: int) -> ExperimentOutcome:
    draws = draw_indicators(graph, seed, index)
    binary = graph.with_weights([1.0 - float(d) for d in draws])
    result, certificate = forest_cover_binary(binary)
    return ExperimentOutcome(
        index=index,
        seed=seed,
        draws=draws,
        forest=result.forest,
        objective=result.wi,
        wi=weighted_index(graph, result.forest),
        dual_bound=certificate.bound,
        dual_sets=len(certificate.z_sets),
    )


def select_outcome(outcomes: List[ExperimentOutcome]) -> ExperimentOutcome:
    """Smallest original weighted index; earlier experiments win ties"""
    best = outcomes[0]
    for outcome in outcomes[1:]:
        if outcome.wi < best.wi - EPSILON:
            best = outcome
    return best


def randomized_fc(
    graph: Graph,
    epsilon: float,
    seed: int,
    max_experiments: Optional[int] = None,
) -> FcResult:
    check_epsilon(epsilon)
    if seed < 0:
        raise UsageError(f"Seed must be non-negative: {seed}")
    cap = DEFAULT_MAX_EXPERIMENTS if max_experiments is None else max_experiments
    if cap < 1:
        raise UsageError(f"max_experiments must be positive: {cap}")

    planned = experiment_count(graph.m, epsilon)
    count = min(planned, cap)
    capped = count < planned
    if capped:
        logger.warning(
            f"Running {count} of {planned} experiments;"
            " the result carries no proven guarantee"
        )

    outcomes = [run_experiment(graph, seed, index) for index in range(count)]
    chosen = select_outcome(outcomes)
    by_objective = min(outcomes, key=lambda o: (o.objective, o.index))

    mean_bound = float(np.mean([o.dual_bound for o in outcomes]))
    mean_sets = float(np.mean([o.dual_sets for o in outcomes]))
    logger.debug(
        f"Randomized cover: experiments={count} chosen={chosen.index}"
        f" wi={chosen.wi} mean_dual_bound={mean_bound}"
    )

    return FcResult.build(
        graph,
        chosen.forest,
        METHOD_RANDOM,
        diagnostics={
            "epsilon": epsilon,
            "delta": epsilon**2,
            "seed": seed,
            "experiments": count,
            "planned_experiments": planned,
            "capped": capped,
            "guarantee": GUARANTEE_HEURISTIC if capped else GUARANTEE_PROVEN,
            "selected_experiment": chosen.index,
            "selected_objective": chosen.objective,
            "best_objective_experiment": by_objective.index,
            "best_objective": by_objective.objective,
            "best_objective_wi": by_objective.wi,
            "mean_dual_bound": mean_bound,
            "mean_dual_sets": mean_sets,
        },
    )
