# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from typing import Any, Dict, Final, List, Optional, Tuple

from fcover.bfc.decompose import edge_decompose
from fcover.bfc.transform import check_lambda, transform_weights
from fcover.errors import InvalidForestError, SolverError
from fcover.fc.rounding import lp_rounding_fc
from fcover.graph.components import connected_components
from fcover.graph.core import EPSILON, Graph
from fcover.graph.forest import Forest, Tree, covers, validate_tree, weighted_index
from fcover.logging.logging import logger
from fcover.lp.backend import LpBackend
from fcover.lp.model import DEFAULT_VIOLATION_TOL, FractionalSolution

METHOD_BFC: Final[str] = "bfc"
UNIT_TOL: Final[float] = 1e-12
DECOMPOSE_BETA: Final[float] = 1.0


@dataclass(frozen=True)
class BfcSolution:
    trees: Tuple[Tree, ...]
    lam: float
    tree_weights: Tuple[float, ...] = ()
    fc_value: Optional[float] = None
    """Weighted index of the transformed forest cover"""
    fc_lower_bound: Optional[float] = None
    """LP objective on the transformed instance"""
    diagnostics: Dict[str, Any] = field(default_factory=dict, compare=False)
    relaxation: Optional[FractionalSolution] = field(default=None, compare=False)

    @property
    def count(self) -> int:
        return len(self.trees)

    @property
    def vertices(self) -> frozenset:
        result: set = set()
        for tree in self.trees:
            result.update(tree.vertices)
        return frozenset(result)


def check_bfc_solution(graph: Graph, solution: BfcSolution) -> None:
    """Each tree is a tree of ``graph`` within the bound; trees cover every edge"""
    for index, tree in enumerate(solution.trees):
        validate_tree(graph, tree, index)
        weight = tree.weight(graph.weights())
        if weight > solution.lam + EPSILON * max(1.0, solution.lam):
            raise InvalidForestError(
                f"Tree {index} weighs {weight} above lambda {solution.lam}"
            )
    if not covers(graph, solution.vertices):
        raise InvalidForestError("The trees do not cover every edge")


def remove_unit_edges(graph: Graph, forest: Forest) -> Forest:
    """Drop every forest edge of weight 1, splitting trees.

    The weighted index does not change: each dropped edge trades its weight
    for one more tree.
    """
    trees: List[Tree] = []
    for tree in forest:
        light = [e for e in tree.edges if graph.weight(e) < 1.0 - UNIT_TOL]
        if len(light) == len(tree.edges):
            trees.append(tree)
            continue
        for component in connected_components(graph, tree.vertices, light):
            trees.append(Tree(component.vertices, component.edges))
    result = Forest.of(trees)

    before = weighted_index(graph, forest)
    after = weighted_index(graph, result)
    if abs(before - after) > 1e-9 * max(1.0, float(graph.m)):
        raise SolverError(f"Unit edge removal changed wi from {before} to {after}")
    return result


def bfc_6approx(
    graph: Graph,
    lam: float,
    fixed_point_pruning: bool = False,
    tol: float = DEFAULT_VIOLATION_TOL,
    max_iterations: Optional[int] = None,
    backend: Optional[LpBackend] = None,
) -> BfcSolution:
    check_lambda(lam)
    transformed = transform_weights(graph, lam)
    fc = lp_rounding_fc(
        transformed,
        fixed_point_pruning=fixed_point_pruning,
        tol=tol,
        max_iterations=max_iterations,
        backend=backend,
    )
    split = remove_unit_edges(transformed, fc.forest)

    trees: List[Tree] = []
    for tree in split:
        trees.extend(edge_decompose(transformed, tree, DECOMPOSE_BETA))
    trees.sort(key=lambda t: (t.root, min(t.edges, default=-1)))

    weights = graph.weights()
    solution = BfcSolution(
        trees=tuple(trees),
        lam=lam,
        tree_weights=tuple(t.weight(weights) for t in trees),
        fc_value=fc.wi,
        fc_lower_bound=fc.lower_bound,
        diagnostics={
            "fc_trees": fc.k,
            "split_trees": split.k,
            "lp_iterations": fc.diagnostics.get("lp_iterations"),
            "lp_cuts": fc.diagnostics.get("lp_cuts"),
            "certified_bound": 2.0 * (fc.lower_bound or 0.0),
        },
        relaxation=fc.relaxation,
    )
    check_bfc_solution(graph, solution)
    logger.debug(
        f"Bounded cover: count={solution.count} fc_wi={fc.wi} lp={fc.lower_bound}"
    )
    return solution
