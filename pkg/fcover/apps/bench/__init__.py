# -*- coding: utf-8 -*-

from argparse import Namespace
from asyncio import gather, get_running_loop
from concurrent.futures import ProcessPoolExecutor
from statistics import fmean
from time import perf_counter
from typing import Any, Dict, List, Optional, Sequence

from fcover.aio.run import aio_run
from fcover.apps.bench.trial import Row, TrialSpec, run_trial
from fcover.apps.gen import params_from_args
from fcover.apps.output import emit_report, write_stderr
from fcover.arguments import CMD_BENCH, CMD_BFC
from fcover.errors import UsageError
from fcover.formats.report import RunReport
from fcover.logging.logging import logger

TABLE_COLUMNS = ("trial", "n", "m", "value", "lower_bound", "optimum", "ratio_opt")


async def run_trials(specs: Sequence[TrialSpec], jobs: int) -> List[Row]:
    """Run every trial, in order, on ``jobs`` worker processes"""
    if jobs <= 1:
        return [run_trial(spec) for spec in specs]

    loop = get_running_loop()
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [loop.run_in_executor(executor, run_trial, spec) for spec in specs]
        return list(await gather(*futures))


def _column(rows: Sequence[Row], key: str) -> List[float]:
    return [row[key] for row in rows if row[key] is not None]


def summarize(rows: Sequence[Row]) -> Dict[str, Any]:
    summary: Dict[str, Any] = {
        "trials": len(rows),
        "infeasible": sum(1 for row in rows if not row["feasible"]),
    }
    for key in ("ratio_opt", "ratio_bound"):
        values = _column(rows, key)
        summary[f"{key}_count"] = len(values)
        summary[f"max_{key}"] = max(values) if values else None
        summary[f"mean_{key}"] = fmean(values) if values else None
    summary["mean_value"] = fmean(_column(rows, "value")) if rows else None
    return summary


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def format_table(rows: Sequence[Row]) -> str:
    lines = ["\t".join(TABLE_COLUMNS)]
    for row in rows:
        lines.append("\t".join(_cell(row[column]) for column in TABLE_COLUMNS))
    return "\n".join(lines)


def _specs(args: Namespace, max_iterations: Optional[int]) -> List[TrialSpec]:
    params = params_from_args(args)
    params.validate()
    return [
        TrialSpec(
            index=index,
            seed=args.seed,
            kind=args.kind,
            params=params,
            method=args.method,
            epsilon=args.epsilon,
            lam=args.lam,
            max_experiments=args.max_experiments,
            tol=args.tol,
            max_iterations=max_iterations,
            backend=args.lp_backend,
            fixed_point=args.fixed_point_pruning,
            oracle=not args.no_oracle,
        )
        for index in range(args.trials)
    ]


def bench_main(args: Namespace) -> None:
    assert isinstance(args.trials, int)
    assert isinstance(args.method, str)
    assert isinstance(args.jobs, int)
    assert isinstance(args.no_oracle, bool)
    assert isinstance(args.seed, int)
    assert isinstance(args.lam, float)
    assert isinstance(args.max_iterations, int)
    assert isinstance(args.use_uvloop, bool)

    if args.trials < 1:
        raise UsageError(f"--trials must be positive: {args.trials}")
    if args.seed < 0:
        raise UsageError(f"Seed must be non-negative: {args.seed}")
    if args.method == CMD_BFC and args.lam <= 0.0:
        raise UsageError("--method bfc needs a positive --lambda")

    max_iterations = args.max_iterations if args.max_iterations > 0 else None
    specs = _specs(args, max_iterations)

    logger.info(f"Benchmark {args.method} on {args.trials} '{args.kind}' instances")
    started = perf_counter()
    rows = aio_run(run_trials(specs, args.jobs), args.use_uvloop)
    seconds = perf_counter() - started

    summary = summarize(rows)
    if summary["infeasible"]:
        logger.error(f"{summary['infeasible']} trials produced infeasible output")

    report = RunReport(
        command=CMD_BENCH,
        method=args.method,
        instance={"kind": args.kind, "n": args.n, "trials": args.trials},
        value_name="max_ratio_opt",
        value=summary["max_ratio_opt"],
        ratio=summary["mean_ratio_opt"],
        seconds=seconds,
        seed=args.seed,
        diagnostics=dict(summary, jobs=args.jobs, lam=args.lam),
        rows=rows,
    )
    write_stderr(format_table(rows))
    emit_report(args, report)
