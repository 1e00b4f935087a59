# -*- coding: utf-8 -*-

from fcover.graph.components import (
    Component,
    UnionFind,
    connected_components,
    is_connected,
)
from fcover.graph.core import EPSILON, Edge, Graph, GraphMode
from fcover.graph.forest import (
    Forest,
    Tree,
    covers,
    is_forest_cover,
    validate_forest,
    validate_tree,
    weighted_index,
    weighted_index_by_vertices,
)
from fcover.graph.kruskal import kruskal_mst, maximum_spanning_forest

__all__ = [
    "Component",
    "EPSILON",
    "Edge",
    "Forest",
    "Graph",
    "GraphMode",
    "Tree",
    "UnionFind",
    "connected_components",
    "covers",
    "is_connected",
    "is_forest_cover",
    "kruskal_mst",
    "maximum_spanning_forest",
    "validate_forest",
    "validate_tree",
    "weighted_index",
    "weighted_index_by_vertices",
]
