# -*- coding: utf-8 -*-

from os import environ
from typing import Final, FrozenSet, Optional, TypeVar, Union, overload

ENV_PREFIX: Final[str] = "FCOVER_"

TRUE_WORDS: Final[FrozenSet[str]] = frozenset(("y", "yes", "true", "on", "1"))
FALSE_WORDS: Final[FrozenSet[str]] = frozenset(("n", "no", "false", "off", "0"))

DefaultT = TypeVar("DefaultT", str, bool, int, float)


def env_key(name: str) -> str:
    """``FCOVER_<name>``, the variable backing option ``name``"""
    return ENV_PREFIX + name


def parse_boolean(value: str) -> bool:
    word = value.strip().lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise ValueError(f"Not a boolean word: '{value}'")


# fmt: off
@overload
def get_typed_environ_value(key: str) -> Optional[str]: ...
@overload
def get_typed_environ_value(key: str, default: str) -> str: ...
@overload
def get_typed_environ_value(key: str, default: bool) -> bool: ...
@overload
def get_typed_environ_value(key: str, default: int) -> int: ...
@overload
def get_typed_environ_value(key: str, default: float) -> float: ...
# fmt: on


def get_typed_environ_value(
    key: str,
    default: Optional[DefaultT] = None,
) -> Optional[Union[str, bool, int, float]]:
    """Environment value converted to the type of ``default``"""
    if default is None:
        return environ.get(key)

    value = environ.get(key)
    if value is None:
        return default
    if isinstance(default, bool):
        return parse_boolean(value)
    if isinstance(default, str):
        return value
    if isinstance(default, int):
        return int(value)
    if isinstance(default, float):
        return float(value)
    raise TypeError(f"Unsupported default type: {type(default).__name__}")


def environ_flag(name: str) -> bool:
    return get_typed_environ_value(env_key(name), False)


def exchange_env(key: str, exchange: Optional[str]) -> Optional[str]:
    """Replace (or remove, with ``None``) a variable; returns the old value"""
    result = environ.pop(key, None)
    if exchange is not None:
        environ[key] = exchange
    return result
