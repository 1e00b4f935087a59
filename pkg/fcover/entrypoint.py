# -*- coding: utf-8 -*-

from argparse import Namespace
from sys import exit as sys_exit
from typing import Callable, List, Optional

from fcover.apps import run_app
from fcover.arguments import (
    CMDS,
    PRINTER_ATTR_KEY,
    VERBOSE_LEVEL_2,
    get_default_arguments,
)
from fcover.errors import EXIT_CODE_USAGE
from fcover.logging.logging import (
    CONSOLE_COLORED,
    CONSOLE_DEFAULT,
    CONSOLE_SIMPLE,
    SEVERITY_NAME_DEBUG,
    add_console_logging,
    add_rotating_file_logging,
    logger,
    remove_installed_handlers,
    set_root_level,
)


def _apply_debug_preset(args: Namespace) -> None:
    """``-D`` means colored debug logging at verbosity 2"""
    assert isinstance(args.D, bool)
    if args.D:
        args.colored_logging = True
        args.default_logging = False
        args.simple_logging = False
        args.debug = True
        args.verbose = VERBOSE_LEVEL_2


def _console_style(args: Namespace) -> str:
    assert isinstance(args.colored_logging, bool)
    assert isinstance(args.default_logging, bool)
    if args.colored_logging:
        return CONSOLE_COLORED
    if args.default_logging:
        return CONSOLE_DEFAULT
    return CONSOLE_SIMPLE


def configure_logging(args: Namespace) -> None:
    assert isinstance(args.rotate_logging_prefix, str)
    assert isinstance(args.rotate_logging_when, str)
    assert isinstance(args.severity, str)
    assert isinstance(args.debug, bool)

    remove_installed_handlers()
    add_console_logging(_console_style(args))
    if args.rotate_logging_prefix:
        add_rotating_file_logging(args.rotate_logging_prefix, args.rotate_logging_when)
    set_root_level(SEVERITY_NAME_DEBUG if args.debug else args.severity)


def main(
    cmdline: Optional[List[str]] = None,
    printer: Callable[..., None] = print,
) -> int:
    args = get_default_arguments(cmdline)

    if not hasattr(args, PRINTER_ATTR_KEY):
        setattr(args, PRINTER_ATTR_KEY, printer)

    if not args.cmd:
        printer(f"A command is required: {', '.join(CMDS)}")
        return EXIT_CODE_USAGE

    assert args.cmd in CMDS
    assert isinstance(args.use_uvloop, bool)
    assert isinstance(args.verbose, int)

    _apply_debug_preset(args)
    configure_logging(args)

    if args.verbose >= VERBOSE_LEVEL_2:
        logger.debug(f"Arguments: {args}")

    return run_app(args.cmd, args)


if __name__ == "__main__":
    sys_exit(main())
