# -*- coding: utf-8 -*-

from typing import Dict, List, Optional, Sequence, Set, Tuple

from fcover.errors import InstanceError
from fcover.graph.core import EPSILON, Graph
from fcover.graph.forest import Tree, validate_tree

Piece = Tuple[Set[int], float]


def _piece_tree(graph: Graph, edges: Set[int]) -> Tree:
    vertices: Set[int] = set()
    for edge_id in edges:
        vertices.update(graph.edge(edge_id).endpoints)
    return Tree.of(vertices, edges)


def edge_decompose(
    graph: Graph,
    tree: Tree,
    beta: float,
    weights: Optional[Sequence[float]] = None,
) -> List[Tree]:
    """Split the edges of ``tree`` into subtrees of weight at most ``2 beta``.

    At most ``max(w(tree) / beta, 1)`` trees come back; they may share cut
    vertices. Subtrees are detached bottom-up from the smallest vertex as
    root, and only while more than ``2 beta`` of weight remains attached.
    """
    validate_tree(graph, tree)
    if beta <= 0.0:
        raise InstanceError(f"beta must be positive: {beta}")
    if weights is None:
        weights = graph.weights()
    if not tree.edges:
        return [tree]

    for edge_id in tree.edges:
        if weights[edge_id] > beta + EPSILON:
            raise InstanceError(
                f"Edge {edge_id} weighs {weights[edge_id]} which exceeds beta {beta}"
            )

    children: Dict[int, List[Tuple[int, int]]] = {v: [] for v in tree.vertices}
    adjacency: Dict[int, List[Tuple[int, int]]] = {v: [] for v in tree.vertices}
    for edge_id in sorted(tree.edges):
        edge = graph.edge(edge_id)
        adjacency[edge.u].append((edge.v, edge_id))
        adjacency[edge.v].append((edge.u, edge_id))

    root = tree.root
    order: List[int] = []
    stack = [root]
    seen = {root}
    while stack:
        vertex = stack.pop()
        order.append(vertex)
        for neighbor, edge_id in sorted(adjacency[vertex]):
            if neighbor not in seen:
                seen.add(neighbor)
                children[vertex].append((neighbor, edge_id))
                stack.append(neighbor)

    remaining = sum(weights[e] for e in tree.edges)
    pending: Dict[int, Piece] = {}
    pieces: List[Set[int]] = []

    for vertex in reversed(order):
        acc_edges: Set[int] = set()
        acc_weight = 0.0
        for child, edge_id in children[vertex]:
            child_edges, child_weight = pending.pop(child)
            branch = child_edges | {edge_id}
            branch_weight = child_weight + weights[edge_id]
            if branch_weight >= beta and remaining > 2.0 * beta:
                pieces.append(branch)
                remaining -= branch_weight
                continue
            acc_edges |= branch
            acc_weight += branch_weight
            if acc_weight >= beta and remaining > 2.0 * beta:
                pieces.append(acc_edges)
                remaining -= acc_weight
                acc_edges = set()
                acc_weight = 0.0
        pending[vertex] = (acc_edges, acc_weight)

    rest, _ = pending.pop(root)
    if rest:
        pieces.append(rest)

    trees = [_piece_tree(graph, edges) for edges in pieces]
    trees.sort(key=lambda t: (t.root, min(t.edges)))
    return trees
