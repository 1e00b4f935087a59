# -*- coding: utf-8 -*-

from itertools import combinations
from typing import List, Optional, Tuple

from fcover.errors import InstanceError
from fcover.exact.budget import FC_BUDGET, VERTEX_COVER_BUDGET, ExactBudget
from fcover.graph.core import EPSILON, Graph, GraphMode
from fcover.graph.forest import Forest, weighted_index
from fcover.graph.kruskal import maximum_spanning_forest


def edge_masks(graph: Graph) -> List[int]:
    return [(1 << e.u) | (1 << e.v) for e in graph.edges]


def is_cover_mask(mask: int, masks: List[int]) -> bool:
    return all(mask & pair for pair in masks)


def mask_vertices(mask: int, n: int) -> List[int]:
    return [v for v in range(n) if mask >> v & 1]


def best_forest_on(graph: Graph, vertices: List[int]) -> Tuple[Forest, float]:
    """Optimal forest with vertex set exactly ``vertices``"""
    forest = maximum_spanning_forest(graph, vertices)
    return forest, weighted_index(graph, forest)


def exact_fc(graph: Graph, budget: ExactBudget = FC_BUDGET) -> Tuple[Forest, float]:
    """Minimum weighted index over every vertex cover.

    Equal values go to the lexicographically smallest cover.
    """
    if graph.mode != GraphMode.FC:
        raise InstanceError("Exact forest cover needs weights normalized to [0, 1]")
    budget.check(graph, "Exact forest cover")

    masks = edge_masks(graph)
    best: Optional[Tuple[float, List[int], Forest]] = None
    for mask in range(1 << graph.n):
        if not is_cover_mask(mask, masks):
            continue
        vertices = mask_vertices(mask, graph.n)
        forest, value = best_forest_on(graph, vertices)
        if (
            best is None
            or value < best[0] - EPSILON
            or (value <= best[0] + EPSILON and vertices < best[1])
        ):
            best = (value, vertices, forest)

    assert best is not None
    return best[2], best[0]


def minimum_vertex_cover_size(
    graph: Graph, budget: ExactBudget = VERTEX_COVER_BUDGET
) -> int:
    budget.check(graph, "Exhaustive vertex cover")
    masks = edge_masks(graph)
    for size in range(graph.n + 1):
        for chosen in combinations(range(graph.n), size):
            mask = sum(1 << v for v in chosen)
            if is_cover_mask(mask, masks):
                return size
    return graph.n
