# -*- coding: utf-8 -*-

from logging import Formatter
from typing import IO, Optional

import coloredlogs

LEVEL_STYLES = {
    "debug": {"color": "green"},
    "info": {},
    "warning": {"color": "yellow"},
    "error": {"color": "red"},
    "critical": {"color": "red", "bold": True},
}

FIELD_STYLES = {
    "asctime": {"color": "green"},
    "process": {"color": "magenta"},
    "levelname": {"bold": True},
    "name": {"color": "blue"},
}


def colored_formatter(
    fmt: str,
    datefmt: Optional[str] = None,
    stream: Optional[IO] = None,
) -> Formatter:
    """ANSI colored formatter, or a plain one when ``stream`` is not a terminal.

    Reports may share the terminal with logs, so piped stderr stays plain.
    """
    if stream is not None and not coloredlogs.terminal_supports_colors(stream):
        return Formatter(fmt=fmt, datefmt=datefmt)
    return coloredlogs.ColoredFormatter(
        fmt=fmt,
        datefmt=datefmt,
        level_styles=LEVEL_STYLES,
        field_styles=FIELD_STYLES,
    )
