# -*- coding: utf-8 -*-

from typing import Iterable, List, Tuple

from fcover.errors import InstanceError
from fcover.fc.dual import DualCertificate
from fcover.fc.result import METHOD_BINARY, FcResult
from fcover.graph.components import connected_components
from fcover.graph.core import EPSILON, Edge, Graph
from fcover.graph.forest import Forest, Tree
from fcover.graph.kruskal import kruskal_mst
from fcover.logging.logging import logger
from fcover.matching.blossom import maximum_matching


def is_free_edge(edge: Edge) -> bool:
    return abs(edge.w) <= EPSILON


def split_by_weight(graph: Graph) -> Tuple[List[int], List[int]]:
    """``V_0`` touches a weight-0 edge, ``V_1`` is every other vertex"""
    touched = set()
    for edge in graph.edges:
        if is_free_edge(edge):
            touched.update(edge.endpoints)
    zero = [v for v in graph.vertices if v in touched]
    one = [v for v in graph.vertices if v not in touched]
    return zero, one


def forest_cover_binary(graph: Graph) -> Tuple[FcResult, DualCertificate]:
    """2-approximation for 0/1 weights with a matching-based dual certificate.

    Each weight-0 component is spanned by one tree; a maximum matching of the
    remaining vertices adds one two-vertex tree per matched edge.
    """
    if not graph.is_binary():
        odd = next(
            e for e in graph.edges if not is_free_edge(e) and abs(e.w - 1.0) > EPSILON
        )
        raise InstanceError(f"Edge {odd.id} has non-binary weight {odd.w}")

    zero, one = split_by_weight(graph)
    components = connected_components(graph, zero, is_free_edge)
    trees = [kruskal_mst(graph, c.vertices, is_free_edge) for c in components]

    matching = maximum_matching(graph, one)
    for edge_id in sorted(matching.edges):
        edge = graph.edge(edge_id)
        trees.append(Tree.of(edge.endpoints, (edge_id,)))

    dual_sets: List[Iterable[int]] = [c.vertices for c in components]
    dual_sets.extend(matching.pairs(graph))
    certificate = DualCertificate.from_sets(dual_sets)

    k = len(components)
    result = FcResult.build(
        graph,
        Forest.of(trees),
        METHOD_BINARY,
        lower_bound=certificate.bound,
        diagnostics={
            "components": k,
            "matching": matching.size,
            "dual_bound": certificate.bound,
        },
    )
    assert abs(result.wi - (k + 2 * matching.size)) <= EPSILON * max(1.0, graph.m)
    logger.debug(
        f"Binary cover: k={k} |M|={matching.size}"
        f" wi={result.wi} bound={certificate.bound}"
    )
    return result, certificate
