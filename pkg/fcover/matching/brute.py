# -*- coding: utf-8 -*-

from typing import Final, Iterable, List, Optional

from fcover.errors import BudgetExceededError
from fcover.graph.components import select_edges, select_vertices
from fcover.graph.core import Edge, Graph
from fcover.matching.blossom import Matching

MAX_BRUTE_FORCE_EDGES: Final[int] = 16


def brute_force_matching(
    graph: Graph,
    vertices: Optional[Iterable[int]] = None,
    edges: Optional[Iterable[int]] = None,
    max_edges: int = MAX_BRUTE_FORCE_EDGES,
) -> Matching:
    """Maximum matching by exhaustive include/exclude search"""
    chosen = select_edges(graph, select_vertices(graph, vertices), edges)
    if len(chosen) > max_edges:
        raise BudgetExceededError(
            f"Exhaustive matching is limited to {max_edges} edges, got {len(chosen)}"
        )

    best: List[int] = []

    def search(index: int, used: set, current: List[int]) -> None:
        nonlocal best
        if len(current) + (len(chosen) - index) <= len(best):
            return
        if index == len(chosen):
            best = list(current)
            return
        edge: Edge = chosen[index]
        if edge.u not in used and edge.v not in used:
            used.add(edge.u)
            used.add(edge.v)
            current.append(edge.id)
            search(index + 1, used, current)
            current.pop()
            used.discard(edge.u)
            used.discard(edge.v)
        search(index + 1, used, current)

    search(0, set(), [])
    return Matching(frozenset(best))
