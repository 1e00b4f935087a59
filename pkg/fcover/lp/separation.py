# -*- coding: utf-8 -*-

from math import inf
from typing import Final, Optional, Sequence, Tuple

from fcover.graph.core import Edge, Graph
from fcover.lp.flow import FlowNetwork
from fcover.lp.model import (
    DEFAULT_VIOLATION_TOL,
    FractionalSolution,
    SubsetCut,
    subset_lhs,
)
from fcover.logging.logging import logger

EDGE_NODE_TOL: Final[float] = 1e-12
VALUE_TIE_TOL: Final[float] = 1e-12


def minimize_through_edge(
    graph: Graph,
    x: Sequence[float],
    y: Sequence[float],
    anchor: Edge,
) -> Tuple[SubsetCut, float]:
    """Minimum of ``sum x - sum y over E(S)`` over sets ``S`` holding ``anchor``.

    Maximum-weight closure: edges are projects worth ``y_e`` that require
    their two endpoints, each costing ``x_i``. The anchor endpoints are tied
    to the source with infinite capacity and carry no sink arc, so they
    always sit on the source side.
    """
    n = graph.n
    source = n
    sink = n + 1
    network = FlowNetwork(n + 2)

    forced = anchor.endpoints
    profit = 0.0
    for edge in graph.edges:
        capacity = max(0.0, y[edge.id])
        if capacity <= EDGE_NODE_TOL:
            continue
        node = network.add_node()
        network.add_arc(source, node, capacity)
        network.add_arc(node, edge.u, inf)
        network.add_arc(node, edge.v, inf)
        profit += capacity

    for vertex in graph.vertices:
        if vertex in forced:
            network.add_arc(source, vertex, inf)
        else:
            network.add_arc(vertex, sink, max(0.0, x[vertex]))

    result = network.max_flow(source, sink)
    if abs(result.value - result.cut_capacity) > 1e-7 * max(1.0, result.value):
        logger.warning(
            f"Flow value {result.value} differs from cut capacity {result.cut_capacity}"
        )

    chosen = {v for v in result.source_side if v < n}
    chosen.update(forced)
    value = subset_lhs(graph, x, y, chosen)

    through_cut = sum(max(0.0, x[v]) for v in forced) + result.value - profit
    if abs(through_cut - value) > 1e-6:
        logger.debug(
            f"Edge {anchor.id}: cut value {through_cut} vs direct value {value}"
        )
    return SubsetCut.of(chosen, value), value


def separation_oracle(
    graph: Graph,
    solution: FractionalSolution,
    tol: float = DEFAULT_VIOLATION_TOL,
) -> Optional[SubsetCut]:
    """Most violated subset constraint, or ``None`` when all hold within ``tol``.

    Every edge anchors one closure problem; the smallest value wins and ties
    go to the lowest edge id. This is the most violated set, not the first
    violated one in edge-id order; both are deterministic and either is a
    valid cut.
    """
    best: Optional[SubsetCut] = None
    best_value = inf
    for edge in graph.edges:
        cut, value = minimize_through_edge(graph, solution.x, solution.y, edge)
        if value < best_value - VALUE_TIE_TOL:
            best = cut
            best_value = value

    if best is None or best_value >= 1.0 - tol:
        return None
    return best
