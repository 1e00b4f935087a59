# -*- coding: utf-8 -*-

from io import StringIO
from typing import Optional

from fcover.errors import InstanceError, SolverError
from fcover.graph.core import Graph, GraphMode
from fcover.logging.logging import logger
from fcover.lp.backend import LpBackend
from fcover.lp.model import (
    DEFAULT_VIOLATION_TOL,
    FractionalSolution,
    LpModel,
    subset_lhs,
)
from fcover.lp.separation import separation_oracle
from fcover.lp.simplex import DenseSimplexBackend


def default_iteration_cap(n: int) -> int:
    return max(10, 10 * n * n)


def solve_base_lp(
    model: LpModel,
    backend: Optional[LpBackend] = None,
) -> FractionalSolution:
    """Optimal basic solution over the base rows and the pooled cuts"""
    if backend is None:
        backend = DenseSimplexBackend()

    a, b = model.inequality_system()
    outcome = backend.solve(model.objective(), a, b)
    x, y = model.split(outcome.z)
    solution = FractionalSolution(x, y, outcome.objective, tuple(model.cuts))

    violation = model.max_violation(solution)
    if violation > DEFAULT_VIOLATION_TOL:
        raise SolverError(
            f"Backend '{backend.name}' returned a point violating a row by {violation}"
        )
    return solution


def cutting_plane_solve(
    graph: Graph,
    tol: float = DEFAULT_VIOLATION_TOL,
    max_iterations: Optional[int] = None,
    backend: Optional[LpBackend] = None,
) -> FractionalSolution:
    """LP relaxation optimum with every subset constraint satisfied.

    Starts from the base rows, adds the most violated subset cut after each
    solve, and stops once the oracle finds none. The pool only grows.
    """
    if graph.mode != GraphMode.FC:
        raise InstanceError("The LP relaxation needs weights normalized to [0, 1]")

    cap = max_iterations
    if cap is None:
        cap = default_iteration_cap(graph.n)
    if backend is None:
        backend = DenseSimplexBackend()

    model = LpModel(graph)
    iterations = 0
    while True:
        solution = solve_base_lp(model, backend)
        iterations += 1

        cut = separation_oracle(graph, solution, tol)
        if cut is None:
            logger.debug(
                f"Cutting plane converged: objective={solution.objective:.9f}"
                f" iterations={iterations} cuts={len(model.cuts)}"
            )
            return solution.with_pool(model.cuts, iterations)

        logger.debug(
            f"Iteration {iterations}: objective={solution.objective:.9f}"
            f" cut={cut.sorted_vertices()} lhs={cut.value:.9f}"
        )
        if not model.add_cut(cut):
            raise SolverError(
                f"Separation returned the pooled cut {cut.sorted_vertices()}"
                f" again (lhs={cut.value}) at iteration {iterations}"
            )
        if iterations >= cap:
            raise SolverError(
                f"Cutting plane exceeded {cap} iterations on n={graph.n} m={graph.m}:"
                f" cuts={len(model.cuts)} objective={solution.objective}"
                f" last violation={1.0 - cut.value}"
            )


def dump_cuts(graph: Graph, solution: FractionalSolution) -> str:
    """Text report of the cut pool and the final point (1-indexed vertex ids)"""
    buffer = StringIO()
    buffer.write(
        f"c objective {solution.objective:.9f}"
        f" iterations {solution.iterations} cuts {len(solution.cuts)}\n"
    )
    for cut in solution.cuts:
        ids = ", ".join(str(v + 1) for v in cut.sorted_vertices())
        lhs = subset_lhs(graph, solution.x, solution.y, cut.vertices)
        buffer.write(f"S = {{{ids}}}: {lhs:.9f}\n")
    for vertex, value in enumerate(solution.x):
        buffer.write(f"x {vertex + 1} {value:.9f}\n")
    for edge in graph.edges:
        buffer.write(f"y {edge.u + 1} {edge.v + 1} {solution.y[edge.id]:.9f}\n")
    return buffer.getvalue()
