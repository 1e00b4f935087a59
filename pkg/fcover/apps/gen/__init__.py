# -*- coding: utf-8 -*-

from argparse import Namespace

from fcover.apps.output import write_stderr
from fcover.formats.instance import emit_instance, write_instance
from fcover.generators import GeneratorParams, generate
from fcover.logging.logging import logger


def params_from_args(args: Namespace) -> GeneratorParams:
    assert isinstance(args.n, int)
    assert isinstance(args.p, float)
    assert isinstance(args.bias, float)
    assert isinstance(args.scale, float)
    assert isinstance(args.weight, float)
    return GeneratorParams(
        n=args.n, p=args.p, bias=args.bias, scale=args.scale, weight=args.weight
    )


def gen_main(args: Namespace) -> None:
    assert isinstance(args.kind, str)
    assert isinstance(args.seed, int)
    assert isinstance(args.out, str)

    params = params_from_args(args)
    graph = generate(args.kind, params, args.seed)
    comments = [
        f"kind {args.kind} seed {args.seed}",
        f"n {params.n} p {params.p} bias {params.bias}"
        f" scale {params.scale} weight {params.weight}",
    ]
    text = emit_instance(graph, comments)

    if args.out:
        write_instance(args.out, graph, comments)
        logger.info(f"Instance written to '{args.out}'")
    else:
        args._printer(text.rstrip("\n"))
    write_stderr(f"gen/{args.kind} n={graph.n} m={graph.m} seed={args.seed}")
