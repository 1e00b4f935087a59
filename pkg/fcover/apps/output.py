# -*- coding: utf-8 -*-

import sys
from argparse import Namespace
from typing import Iterable

from fcover.errors import UsageError
from fcover.formats.instance import InstanceFile, read_instance
from fcover.formats.report import REPORT_FORMAT_JSON, RunReport, dumps_report
from fcover.formats.solution import write_solution
from fcover.graph.core import Graph, GraphMode
from fcover.graph.forest import Tree
from fcover.logging.logging import logger

STDERR_PATH = "-"


def write_stderr(text: str) -> None:
    sys.stderr.write(text.rstrip("\n") + "\n")


def require_input(args: Namespace) -> InstanceFile:
    assert isinstance(args.input, str)
    if not args.input:
        raise UsageError("--input is required")
    instance = read_instance(args.input)
    logger.info(
        f"Loaded '{args.input}': kind={instance.graph.mode.value}"
        f" n={instance.graph.n} m={instance.graph.m}"
    )
    return instance


def write_text(path: str, text: str) -> None:
    if path == STDERR_PATH:
        write_stderr(text)
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def emit_report(args: Namespace, report: RunReport) -> None:
    """Report to ``--out`` or stdout, one-line summary to stderr"""
    assert isinstance(args.out, str)
    assert isinstance(args.report_format, str)

    data = dumps_report(report, args.report_format)
    if args.out:
        with open(args.out, "wb") as f:
            f.write(data)
        logger.info(f"Report written to '{args.out}'")
    elif args.report_format == REPORT_FORMAT_JSON:
        args._printer(data.decode("utf-8").rstrip("\n"))
    else:
        raise UsageError(f"--report-format {args.report_format} needs --out")

    write_stderr(report.summary())


def emit_solution_file(
    args: Namespace, kind: GraphMode, graph: Graph, trees: Iterable[Tree]
) -> None:
    assert isinstance(args.solution_out, str)
    if args.solution_out:
        write_solution(args.solution_out, kind, graph.n, trees)
        logger.info(f"Solution written to '{args.solution_out}'")
