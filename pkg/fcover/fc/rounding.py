# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Dict, Final, List, Optional, Set

from fcover.errors import SolverError
from fcover.fc.result import METHOD_ROUND, FcResult
from fcover.graph.components import connected_components
from fcover.graph.core import Graph
from fcover.graph.forest import Forest, Tree, is_forest_cover
from fcover.graph.kruskal import kruskal_mst
from fcover.logging.logging import logger
from fcover.lp.backend import LpBackend
from fcover.lp.cutting_plane import cutting_plane_solve
from fcover.lp.model import DEFAULT_VIOLATION_TOL, SUPPORT_TOL, FractionalSolution

HALF: Final[float] = 0.5
HALF_TOL: Final[float] = DEFAULT_VIOLATION_TOL


@dataclass
class RoundingStats:
    support_vertices: int = 0
    support_edges: int = 0
    components: int = 0
    kept_isolated: int = 0
    dropped_isolated: int = 0
    pruned_pendants: int = 0


def is_low(value: float) -> bool:
    return value < HALF - HALF_TOL


def _prune_pendants(
    graph: Graph, tree: Tree, x, fixed_point: bool, stats: RoundingStats
) -> Tree:
    vertices: Set[int] = set(tree.vertices)
    edges: Set[int] = set(tree.edges)
    while len(vertices) > 1:
        degree: Dict[int, List[int]] = {v: [] for v in vertices}
        for edge_id in edges:
            edge = graph.edge(edge_id)
            degree[edge.u].append(edge_id)
            degree[edge.v].append(edge_id)

        doomed = [v for v in sorted(vertices) if len(degree[v]) == 1 and is_low(x[v])]
        removed: Set[int] = set()
        for vertex in doomed:
            edge_id = degree[vertex][0]
            if graph.edge(edge_id).other(vertex) in removed:
                continue
            removed.add(vertex)
            vertices.discard(vertex)
            edges.discard(edge_id)
        stats.pruned_pendants += len(removed)

        if not removed or not fixed_point:
            break
    return Tree.of(vertices, edges)


def round_solution(
    graph: Graph,
    solution: FractionalSolution,
    fixed_point_pruning: bool = False,
    stats: Optional[RoundingStats] = None,
) -> Forest:
    """Round an LP optimum into a forest cover.

    Support vertices with no support edge stay as singletons when
    ``x >= 0.5``. Every other support component is spanned by Kruskal and
    loses its low-``x`` pendants, once over the initial tree unless
    ``fixed_point_pruning``.
    """
    if stats is None:
        stats = RoundingStats()

    x = solution.x
    vertices = solution.support_vertices(SUPPORT_TOL)
    edges = set(solution.support_edges(SUPPORT_TOL))
    stats.support_vertices = len(vertices)
    stats.support_edges = len(edges)

    trees: List[Tree] = []
    components = connected_components(graph, vertices, edges)
    stats.components = len(components)
    for component in components:
        if not component.edges:
            (vertex,) = component.vertices
            if is_low(x[vertex]):
                stats.dropped_isolated += 1
            else:
                stats.kept_isolated += 1
                trees.append(Tree.singleton(vertex))
            continue

        mst = kruskal_mst(graph, component.vertices, component.edges)
        trees.append(_prune_pendants(graph, mst, x, fixed_point_pruning, stats))
    return Forest.of(trees)


def lp_rounding_fc(
    graph: Graph,
    fixed_point_pruning: bool = False,
    tol: float = DEFAULT_VIOLATION_TOL,
    max_iterations: Optional[int] = None,
    backend: Optional[LpBackend] = None,
) -> FcResult:
    solution = cutting_plane_solve(graph, tol, max_iterations, backend)
    stats = RoundingStats()
    forest = round_solution(graph, solution, fixed_point_pruning, stats)
    if not is_forest_cover(graph, forest):
        raise SolverError("Rounding left an edge uncovered")

    lower_bound = solution.objective
    result = FcResult.build(
        graph,
        forest,
        METHOD_ROUND,
        lower_bound=lower_bound,
        diagnostics={
            "lp_objective": solution.objective,
            "lp_iterations": solution.iterations,
            "lp_cuts": len(solution.cuts),
            "fixed_point_pruning": fixed_point_pruning,
            "support_vertices": stats.support_vertices,
            "support_edges": stats.support_edges,
            "support_components": stats.components,
            "kept_isolated": stats.kept_isolated,
            "dropped_isolated": stats.dropped_isolated,
            "pruned_pendants": stats.pruned_pendants,
        },
        relaxation=solution,
    )
    logger.debug(
        f"Rounded cover: wi={result.wi} lp={solution.objective}"
        f" pruned={stats.pruned_pendants}"
    )
    return result
