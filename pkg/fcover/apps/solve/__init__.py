# -*- coding: utf-8 -*-

from argparse import Namespace
from time import perf_counter
from typing import Optional

from fcover.apps.output import (
    emit_report,
    emit_solution_file,
    require_input,
    write_text,
)
from fcover.arguments import (
    CMD_BFC,
    CMD_BINARY,
    CMD_EXACT,
    CMD_RANDOM,
    CMD_ROUND,
)
from fcover.bfc.pipeline import METHOD_BFC, BfcSolution, bfc_6approx
from fcover.errors import UsageError
from fcover.exact.bfc import exact_bfc
from fcover.exact.fc import exact_fc
from fcover.fc.binary import forest_cover_binary
from fcover.fc.dual import check_dual_feasibility
from fcover.fc.randomized import randomized_fc
from fcover.fc.result import METHOD_EXACT, FcResult
from fcover.fc.rounding import lp_rounding_fc
from fcover.formats.report import RunReport, describe_instance, describe_trees
from fcover.graph.core import Graph, GraphMode
from fcover.logging.logging import logger
from fcover.lp import create_backend, dump_cuts
from fcover.lp.model import FractionalSolution


def fc_report(
    command: str,
    graph: Graph,
    source: Optional[str],
    result: FcResult,
    seconds: float,
    seed: Optional[int] = None,
) -> RunReport:
    return RunReport(
        command=command,
        method=result.method,
        instance=describe_instance(graph, source),
        value_name="wi",
        value=result.wi,
        lower_bound=result.lower_bound,
        ratio=result.ratio(),
        seconds=seconds,
        seed=seed,
        trees=describe_trees(result.forest),
        diagnostics=dict(result.diagnostics, trees=result.k),
    )


def bfc_report(
    command: str,
    graph: Graph,
    source: Optional[str],
    solution: BfcSolution,
    method: str,
    seconds: float,
) -> RunReport:
    diagnostics = dict(solution.diagnostics)
    diagnostics.update(
        {
            "lambda": solution.lam,
            "fc_value": solution.fc_value,
            "fc_lower_bound": solution.fc_lower_bound,
            "tree_weights": list(solution.tree_weights),
        }
    )
    return RunReport(
        command=command,
        method=method,
        instance=describe_instance(graph, source),
        value_name="count",
        value=float(solution.count),
        seconds=seconds,
        trees=describe_trees(solution.trees),
        diagnostics=diagnostics,
    )


def _max_iterations(args: Namespace) -> Optional[int]:
    assert isinstance(args.max_iterations, int)
    return args.max_iterations if args.max_iterations > 0 else None


def _dump(args: Namespace, graph: Graph, relaxation: Optional[FractionalSolution]):
    assert isinstance(args.dump_cuts, str)
    if args.dump_cuts and relaxation is not None:
        write_text(args.dump_cuts, dump_cuts(graph, relaxation))


def _require_lambda(args: Namespace) -> float:
    assert isinstance(args.lam, float)
    if args.lam <= 0.0:
        raise UsageError("--lambda is required and must be positive")
    return args.lam


def exact_main(args: Namespace) -> None:
    assert isinstance(args.lam, float)
    instance = require_input(args)
    graph = instance.graph

    started = perf_counter()
    if args.lam > 0.0:
        solution, optimum = exact_bfc(graph, args.lam)
        logger.info(f"Exact bounded cover: count={optimum}")
        seconds = perf_counter() - started
        report = bfc_report(
            CMD_EXACT, graph, args.input, solution, METHOD_EXACT, seconds
        )
        report.lower_bound = float(optimum)
        report.ratio = 1.0 if optimum > 0 else None
        emit_solution_file(args, GraphMode.BFC, graph, solution.trees)
    else:
        if graph.mode != GraphMode.FC:
            raise UsageError("A bfc instance needs --lambda")
        forest, optimum = exact_fc(graph)
        result = FcResult.build(graph, forest, METHOD_EXACT, lower_bound=optimum)
        logger.info(f"Exact forest cover: wi={optimum}")
        seconds = perf_counter() - started
        report = fc_report(CMD_EXACT, graph, args.input, result, seconds)
        emit_solution_file(args, GraphMode.FC, graph, forest)
    emit_report(args, report)


def binary_main(args: Namespace) -> None:
    instance = require_input(args)
    graph = instance.graph

    started = perf_counter()
    result, certificate = forest_cover_binary(graph)
    seconds = perf_counter() - started

    report = fc_report(CMD_BINARY, graph, args.input, result, seconds)
    report.diagnostics["dual_feasible"] = check_dual_feasibility(graph, certificate)
    report.diagnostics["dual_sets_disjoint"] = certificate.sets_disjoint()
    emit_solution_file(args, GraphMode.FC, graph, result.forest)
    emit_report(args, report)


def random_main(args: Namespace) -> None:
    assert isinstance(args.epsilon, float)
    assert isinstance(args.seed, int)
    assert isinstance(args.max_experiments, int)

    instance = require_input(args)
    graph = instance.graph

    started = perf_counter()
    result = randomized_fc(graph, args.epsilon, args.seed, args.max_experiments)
    seconds = perf_counter() - started

    report = fc_report(CMD_RANDOM, graph, args.input, result, seconds, args.seed)
    emit_solution_file(args, GraphMode.FC, graph, result.forest)
    emit_report(args, report)


def round_main(args: Namespace) -> None:
    assert isinstance(args.tol, float)
    assert isinstance(args.lp_backend, str)
    assert isinstance(args.fixed_point_pruning, bool)

    instance = require_input(args)
    graph = instance.graph

    started = perf_counter()
    result = lp_rounding_fc(
        graph,
        fixed_point_pruning=args.fixed_point_pruning,
        tol=args.tol,
        max_iterations=_max_iterations(args),
        backend=create_backend(args.lp_backend),
    )
    seconds = perf_counter() - started

    _dump(args, graph, result.relaxation)
    report = fc_report(CMD_ROUND, graph, args.input, result, seconds)
    report.diagnostics["lp_backend"] = args.lp_backend
    emit_solution_file(args, GraphMode.FC, graph, result.forest)
    emit_report(args, report)


def bfc_main(args: Namespace) -> None:
    assert isinstance(args.tol, float)
    assert isinstance(args.lp_backend, str)
    assert isinstance(args.fixed_point_pruning, bool)

    lam = _require_lambda(args)
    instance = require_input(args)
    graph = instance.graph

    started = perf_counter()
    solution = bfc_6approx(
        graph,
        lam,
        fixed_point_pruning=args.fixed_point_pruning,
        tol=args.tol,
        max_iterations=_max_iterations(args),
        backend=create_backend(args.lp_backend),
    )
    seconds = perf_counter() - started

    _dump(args, graph, solution.relaxation)
    report = bfc_report(CMD_BFC, graph, args.input, solution, METHOD_BFC, seconds)
    report.diagnostics["lp_backend"] = args.lp_backend
    emit_solution_file(args, GraphMode.BFC, graph, solution.trees)
    emit_report(args, report)
