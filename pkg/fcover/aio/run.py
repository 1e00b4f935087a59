# -*- coding: utf-8 -*-

from asyncio import run as asyncio_run
from sys import version_info
from typing import Any, Coroutine, TypeVar

ResultT = TypeVar("ResultT")


def uv_run(coro: Coroutine[Any, Any, ResultT]) -> ResultT:
    from uvloop import install as uvloop_install
    from uvloop import new_event_loop as uvloop_new_event_loop

    if version_info >= (3, 11):
        from asyncio import Runner  # type: ignore[attr-defined]

        with Runner(loop_factory=uvloop_new_event_loop) as runner:
            return runner.run(coro)
    else:
        uvloop_install()
        return asyncio_run(coro)


def aio_run(coro: Coroutine[Any, Any, ResultT], use_uvloop=False) -> ResultT:
    if use_uvloop:
        return uv_run(coro)
    else:
        return asyncio_run(coro)
