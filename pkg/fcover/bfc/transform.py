# -*- coding: utf-8 -*-

from math import isfinite

from fcover.errors import InstanceError
from fcover.graph.core import EPSILON, Graph, GraphMode


def check_lambda(lam: float) -> None:
    if not isfinite(lam) or lam <= 0.0:
        raise InstanceError(f"lambda must be a positive finite number: {lam}")


def transform_weight(w: float, lam: float) -> float:
    """1 above half the bound, proportional ``2w / lambda`` otherwise"""
    if w > lam / 2.0:
        return 1.0
    return min(1.0, 2.0 * w / lam)


def transform_weights(graph: Graph, lam: float) -> Graph:
    check_lambda(lam)
    for edge in graph.edges:
        if edge.w > lam + EPSILON:
            raise InstanceError(
                f"Edge {edge.id} ({edge.u}, {edge.v}) weighs {edge.w} > lambda {lam}"
            )
    return graph.with_weights(
        [transform_weight(e.w, lam) for e in graph.edges], GraphMode.FC
    )
