# -*- coding: utf-8 -*-

from typing import Iterable, List

from fcover.errors import InstanceError
from fcover.graph.components import EdgeFilter, UnionFind, select_edges
from fcover.graph.core import EPSILON, Edge, Graph
from fcover.graph.forest import Forest, Tree


def saving(edge: Edge) -> float:
    return 1.0 - edge.w


def kruskal_order(edges: Iterable[Edge]) -> List[Edge]:
    """Ascending weight; equal weights by edge id"""
    return sorted(edges, key=lambda e: (e.w, e.id))


def kruskal_mst(
    graph: Graph,
    component: Iterable[int],
    edge_filter: EdgeFilter = None,
) -> Tree:
    vertices = sorted(set(component))
    if not vertices:
        raise InstanceError("Cannot span an empty component")

    sets = UnionFind(vertices)
    chosen: List[int] = []
    for edge in kruskal_order(select_edges(graph, vertices, edge_filter)):
        if sets.union(edge.u, edge.v):
            chosen.append(edge.id)
            if len(chosen) == len(vertices) - 1:
                break

    if len(chosen) != len(vertices) - 1:
        raise InstanceError(
            f"Component starting at vertex {vertices[0]} is not connected"
        )
    return Tree.of(vertices, chosen)


def maximum_spanning_forest(
    graph: Graph,
    vertices: Iterable[int],
) -> Forest:
    """Spanning forest of ``G[vertices]`` maximising the total edge saving.

    Edges with a saving of zero or less never enter the forest, so every tree
    keeps only edges that lower the weighted index.
    """
    chosen_vertices = sorted(set(vertices))
    sets = UnionFind(chosen_vertices)
    profitable = [
        e for e in select_edges(graph, chosen_vertices) if saving(e) > EPSILON
    ]
    profitable.sort(key=lambda e: (-saving(e), e.id))

    chosen: List[int] = []
    for edge in profitable:
        if sets.union(edge.u, edge.v):
            chosen.append(edge.id)

    groups: dict = {}
    for v in chosen_vertices:
        groups.setdefault(sets.find(v), (set(), set()))[0].add(v)
    for edge_id in chosen:
        groups[sets.find(graph.edge(edge_id).u)][1].add(edge_id)
    return Forest.of(Tree.of(vs, es) for vs, es in groups.values())
