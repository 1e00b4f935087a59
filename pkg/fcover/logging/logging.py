# -*- coding: utf-8 -*-

import sys
from logging import (
    CRITICAL,
    DEBUG,
    ERROR,
    INFO,
    NOTSET,
    WARNING,
    Formatter,
    Handler,
    StreamHandler,
    getLogger,
)
from logging.handlers import TimedRotatingFileHandler
from typing import Dict, Final, List, Literal, Sequence, Union, get_args

DEFAULT_LOGGER_NAME: Final[str] = "fcover"

logger = getLogger(DEFAULT_LOGGER_NAME)

SEVERITY_NAME_CRITICAL = "critical"
SEVERITY_NAME_ERROR = "error"
SEVERITY_NAME_WARNING = "warning"
SEVERITY_NAME_INFO = "info"
SEVERITY_NAME_DEBUG = "debug"
SEVERITY_NAME_NOTSET = "notset"
SEVERITY_NAME_OFF = "off"

SEVERITY_LEVELS: Final[Dict[str, int]] = {
    SEVERITY_NAME_CRITICAL: CRITICAL,
    SEVERITY_NAME_ERROR: ERROR,
    SEVERITY_NAME_WARNING: WARNING,
    SEVERITY_NAME_INFO: INFO,
    SEVERITY_NAME_DEBUG: DEBUG,
    SEVERITY_NAME_NOTSET: NOTSET,
    SEVERITY_NAME_OFF: CRITICAL + 100,
}
SEVERITIES: Final[Sequence[str]] = tuple(SEVERITY_LEVELS)

CONSOLE_COLORED: Final[str] = "colored"
CONSOLE_DEFAULT: Final[str] = "default"
CONSOLE_SIMPLE: Final[str] = "simple"

TimedRotatingWhenLiteral = Literal[
    "S", "M", "H", "D", "W0", "W1", "W2", "W3", "W4", "W5", "W6", "midnight"
]  # W0=Monday

TIMED_ROTATING_WHEN: Final[Sequence[str]] = get_args(TimedRotatingWhenLiteral)
DEFAULT_TIMED_ROTATING_WHEN: Final[str] = "D"

SIMPLE_FORMAT: Final[str] = "%(levelname).1s [%(name)s] %(message)s"
DEFAULT_FORMAT: Final[str] = (
    "%(asctime)s.%(msecs)03d %(process)d %(name)s %(levelname)s %(message)s"
)
DEFAULT_DATEFMT: Final[str] = "%Y-%m-%d %H:%M:%S"

# stdout carries reports; console handlers write to stderr only
_installed_handlers: List[Handler] = []


def severity_level(severity: Union[str, int]) -> int:
    if isinstance(severity, int):
        return severity
    name = severity.lower()
    if name in SEVERITY_LEVELS:
        return SEVERITY_LEVELS[name]
    try:
        return int(name)
    except ValueError:
        raise ValueError(f"Unknown severity: {severity}")


def set_root_level(severity: Union[str, int]) -> None:
    getLogger().setLevel(severity_level(severity))


def _install(handler: Handler, formatter: Formatter) -> Handler:
    handler.setFormatter(formatter)
    getLogger().addHandler(handler)
    _installed_handlers.append(handler)
    return handler


def remove_installed_handlers() -> None:
    """Detach the handlers added here; ``main`` may run many times per process"""
    root = getLogger()
    while _installed_handlers:
        handler = _installed_handlers.pop()
        root.removeHandler(handler)
        handler.close()


def add_console_logging(style: str = CONSOLE_SIMPLE) -> Handler:
    if style == CONSOLE_COLORED:
        from fcover.logging.formatters.colored import colored_formatter

        formatter = colored_formatter(DEFAULT_FORMAT, DEFAULT_DATEFMT, sys.stderr)
    elif style == CONSOLE_DEFAULT:
        formatter = Formatter(fmt=DEFAULT_FORMAT, datefmt=DEFAULT_DATEFMT)
    elif style == CONSOLE_SIMPLE:
        formatter = Formatter(fmt=SIMPLE_FORMAT)
    else:
        raise ValueError(f"Unknown console logging style: {style}")
    return _install(StreamHandler(sys.stderr), formatter)


def add_rotating_file_logging(
    prefix: str,
    when: Union[str, TimedRotatingWhenLiteral] = DEFAULT_TIMED_ROTATING_WHEN,
) -> Handler:
    handler = TimedRotatingFileHandler(prefix, when)
    handler.suffix = "%Y%m%d_%H%M%S.log"
    return _install(handler, Formatter(fmt=DEFAULT_FORMAT, datefmt=DEFAULT_DATEFMT))
