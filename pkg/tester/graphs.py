# -*- coding: utf-8 -*-

from itertools import product
from typing import Iterator, List, Sequence

import networkx as nx
import numpy as np

from fcover.graph.components import UnionFind, connected_components
from fcover.graph.core import Graph, GraphMode
from fcover.graph.forest import Forest, Tree


def path_graph(weights: Sequence[float], mode: GraphMode = GraphMode.FC) -> Graph:
    return Graph(len(weights) + 1, [(i, i + 1, w) for i, w in enumerate(weights)], mode)


def cycle_graph(weights: Sequence[float], mode: GraphMode = GraphMode.FC) -> Graph:
    n = len(weights)
    return Graph(n, [(i, (i + 1) % n, w) for i, w in enumerate(weights)], mode)


def triangle(w: float = 1.0) -> Graph:
    return cycle_graph([w, w, w])


def random_graphs(
    count: int,
    n: int,
    p: float = 0.5,
    seed: int = 0,
    binary: bool = False,
) -> List[Graph]:
    rng = np.random.default_rng(seed)
    result = []
    for _ in range(count):
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    w = float(rng.integers(0, 2)) if binary else float(rng.random())
                    edges.append((u, v, w))
        result.append(Graph(n, edges))
    return result


def atlas_graphs(max_n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every graph on 1 to ``max_n`` vertices up to isomorphism, unit weights"""
    for reference in nx.graph_atlas_g():
        n = reference.number_of_nodes()
        if n > max_n:
            break
        if n == 0 or (connected_only and not nx.is_connected(reference)):
            continue
        pairs = sorted((min(u, v), max(u, v)) for u, v in reference.edges())
        yield Graph(n, [(u, v, 1.0) for u, v in pairs])


def binary_weightings(graph: Graph) -> Iterator[Graph]:
    for weights in product((0.0, 1.0), repeat=graph.m):
        yield graph.with_weights(weights)


def random_forest(graph: Graph, rng: np.random.Generator) -> Forest:
    """Random acyclic edge subset as trees, plus some singleton trees"""
    order = rng.permutation(graph.m)
    keep = rng.random(graph.m) < 0.7
    forest = UnionFind(graph.vertices)
    chosen = set()
    for index in order:
        edge = graph.edge(int(index))
        if keep[index] and forest.union(edge.u, edge.v):
            chosen.add(edge.id)

    touched = {v for e in chosen for v in graph.edge(e).endpoints}
    trees = [
        Tree.of(c.vertices, c.edges)
        for c in connected_components(
            graph, lambda v: v in touched, lambda e: e.id in chosen
        )
    ]
    singles = rng.random(graph.n) < 0.3
    trees.extend(
        Tree.singleton(v) for v in graph.vertices if v not in touched and singles[v]
    )
    return Forest.of(trees)
