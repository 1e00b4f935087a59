# -*- coding: utf-8 -*-

from typing import Dict, List, Tuple

from fcover.bfc.pipeline import BfcSolution
from fcover.bfc.transform import check_lambda
from fcover.exact.budget import BFC_BUDGET, ExactBudget
from fcover.exact.fc import edge_masks, is_cover_mask, mask_vertices
from fcover.graph.components import is_connected
from fcover.graph.core import EPSILON, Graph
from fcover.graph.forest import Tree
from fcover.graph.kruskal import kruskal_mst


def _spanning_trees(graph: Graph, lam: float) -> Dict[int, Tree]:
    """Minimum spanning tree of every connected part whose weight fits"""
    trees: Dict[int, Tree] = {}
    weights = graph.weights()
    for mask in range(1, 1 << graph.n):
        vertices = mask_vertices(mask, graph.n)
        if not is_connected(graph, vertices):
            continue
        tree = kruskal_mst(graph, vertices)
        if tree.weight(weights) <= lam + EPSILON * max(1.0, lam):
            trees[mask] = tree
    return trees


def exact_bfc(
    graph: Graph, lam: float, budget: ExactBudget = BFC_BUDGET
) -> Tuple[BfcSolution, int]:
    """Fewest bounded trees partitioning some vertex cover"""
    check_lambda(lam)
    budget.check(graph, "Exact bounded forest cover")

    trees = _spanning_trees(graph, lam)
    full = 1 << graph.n
    parts = [0] * full
    choice = [0] * full
    for mask in range(1, full):
        low = mask & -mask
        best = graph.n + 1
        # submasks of mask holding its lowest vertex
        sub = mask
        while sub:
            if sub & low and sub in trees and parts[mask ^ sub] + 1 < best:
                best = parts[mask ^ sub] + 1
                choice[mask] = sub
            sub = (sub - 1) & mask
        parts[mask] = best

    masks = edge_masks(graph)
    cover = min(
        (m for m in range(full) if is_cover_mask(m, masks)),
        key=lambda m: (parts[m], mask_vertices(m, graph.n)),
    )

    witness: List[Tree] = []
    rest = cover
    while rest:
        witness.append(trees[choice[rest]])
        rest ^= choice[rest]
    witness.sort(key=lambda t: t.root)

    weights = graph.weights()
    solution = BfcSolution(
        trees=tuple(witness),
        lam=lam,
        tree_weights=tuple(t.weight(weights) for t in witness),
        diagnostics={"cover": mask_vertices(cover, graph.n)},
    )
    return solution, parts[cover]
