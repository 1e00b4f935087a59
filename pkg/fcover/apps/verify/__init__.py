# -*- coding: utf-8 -*-

from argparse import Namespace
from time import perf_counter

from fcover.apps.output import emit_report, require_input
from fcover.arguments import CMD_VERIFY
from fcover.bfc.pipeline import BfcSolution, check_bfc_solution
from fcover.errors import InstanceError, InvalidForestError, UsageError
from fcover.formats.report import RunReport, describe_instance, describe_trees
from fcover.formats.solution import read_solution
from fcover.graph.core import GraphMode
from fcover.graph.forest import (
    Forest,
    is_forest_cover,
    uncovered_edges,
    weighted_index,
)

METHOD_VERIFY = "verify"


def verify_main(args: Namespace) -> None:
    assert isinstance(args.solution, str)
    assert isinstance(args.lam, float)

    if not args.solution:
        raise UsageError("--solution is required")
    instance = require_input(args)
    graph = instance.graph
    stored = read_solution(args.solution)
    if stored.n != graph.n:
        raise InstanceError(
            f"Solution is for {stored.n} vertices, the instance has {graph.n}"
        )

    started = perf_counter()
    if stored.kind == GraphMode.FC:
        forest = Forest.of(stored.trees)
        if not is_forest_cover(graph, forest):
            missing = [i + 1 for i in uncovered_edges(graph, forest.vertices)]
            raise InvalidForestError(f"Edges not covered by the forest: {missing}")
        value = weighted_index(graph, forest)
        value_name = "wi"
        diagnostics = {"trees": forest.k}
    else:
        if args.lam <= 0.0:
            raise UsageError("A bfc solution needs --lambda")
        weights = graph.weights()
        solution = BfcSolution(
            trees=stored.trees,
            lam=args.lam,
            tree_weights=tuple(t.weight(weights) for t in stored.trees),
        )
        check_bfc_solution(graph, solution)
        value = float(solution.count)
        value_name = "count"
        diagnostics = {
            "lambda": args.lam,
            "tree_weights": list(solution.tree_weights),
        }

    report = RunReport(
        command=CMD_VERIFY,
        method=METHOD_VERIFY,
        instance=describe_instance(graph, args.input),
        value_name=value_name,
        value=value,
        seconds=perf_counter() - started,
        trees=describe_trees(stored.trees),
        diagnostics=dict(diagnostics, valid=True, solution=args.solution),
    )
    emit_report(args, report)
