# -*- coding: utf-8 -*-

from argparse import Namespace
from asyncio.exceptions import CancelledError
from functools import lru_cache
from typing import Callable, Dict

from fcover.apps.bench import bench_main
from fcover.apps.gen import gen_main
from fcover.apps.output import write_stderr
from fcover.apps.solve import (
    bfc_main,
    binary_main,
    exact_main,
    random_main,
    round_main,
)
from fcover.apps.verify import verify_main
from fcover.arguments import (
    CMD_BENCH,
    CMD_BFC,
    CMD_BINARY,
    CMD_EXACT,
    CMD_GEN,
    CMD_RANDOM,
    CMD_ROUND,
    CMD_VERIFY,
)
from fcover.errors import EXIT_CODE_UNKNOWN, ForestCoverError
from fcover.logging.logging import logger


@lru_cache
def cmd_apps() -> Dict[str, Callable[[Namespace], None]]:
    return {
        CMD_EXACT: exact_main,
        CMD_BINARY: binary_main,
        CMD_RANDOM: random_main,
        CMD_ROUND: round_main,
        CMD_BFC: bfc_main,
        CMD_GEN: gen_main,
        CMD_BENCH: bench_main,
        CMD_VERIFY: verify_main,
    }


def run_app(cmd: str, args: Namespace) -> int:
    apps = cmd_apps()
    app = apps.get(cmd, None)
    if app is None:
        logger.error(f"Unknown app command: {cmd}")
        return EXIT_CODE_UNKNOWN

    try:
        app(args)
    except ForestCoverError as e:
        logger.error(f"{type(e).__name__}: {e}")
        write_stderr(f"error: {e}")
        return e.exit_code
    except CancelledError:
        logger.debug("An cancelled signal was detected")
    except KeyboardInterrupt:
        logger.warning("An interrupt signal was detected")
    except SystemExit as e:
        assert isinstance(e.code, int)
        if e.code != 0:
            logger.warning(f"A system shutdown has been detected ({e.code})")
        return e.code
    except BaseException as e:
        logger.exception(e)
        return EXIT_CODE_UNKNOWN

    return 0
