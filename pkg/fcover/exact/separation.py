# -*- coding: utf-8 -*-

from typing import FrozenSet, Optional, Sequence, Tuple

from fcover.exact.budget import SEPARATION_BUDGET, ExactBudget
from fcover.exact.fc import mask_vertices
from fcover.graph.core import Graph
from fcover.lp.model import subset_lhs


def brute_force_separation(
    graph: Graph,
    x: Sequence[float],
    y: Sequence[float],
    budget: ExactBudget = SEPARATION_BUDGET,
) -> Optional[Tuple[FrozenSet[int], float]]:
    """Subset with an induced edge minimising ``sum x - sum y over E(S)``"""
    budget.check(graph, "Exhaustive separation")
    best: Optional[Tuple[FrozenSet[int], float]] = None
    for mask in range(1, 1 << graph.n):
        vertices = frozenset(mask_vertices(mask, graph.n))
        if not graph.induced_edges(vertices):
            continue
        value = subset_lhs(graph, x, y, vertices)
        if best is None or value < best[1]:
            best = (vertices, value)
    return best
