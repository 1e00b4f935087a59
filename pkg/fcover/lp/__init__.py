# -*- coding: utf-8 -*-

from functools import lru_cache
from typing import Callable, Dict, Final, List

from fcover.errors import UsageError
from fcover.lp.backend import LpBackend, LpOutcome
from fcover.lp.cutting_plane import (
    cutting_plane_solve,
    default_iteration_cap,
    dump_cuts,
    solve_base_lp,
)
from fcover.lp.flow import FlowNetwork, MaxFlowResult, max_flow
from fcover.lp.model import FractionalSolution, LpModel, SubsetCut, subset_lhs
from fcover.lp.separation import minimize_through_edge, separation_oracle
from fcover.lp.simplex import DenseSimplexBackend

BACKEND_SIMPLEX: Final[str] = "simplex"
BACKEND_SCIPY: Final[str] = "scipy"
DEFAULT_BACKEND: Final[str] = BACKEND_SIMPLEX


def _scipy_backend() -> LpBackend:
    from fcover.lp.scipy_backend import ScipyBackend

    return ScipyBackend()


@lru_cache
def lp_backends() -> Dict[str, Callable[[], LpBackend]]:
    return {
        BACKEND_SIMPLEX: DenseSimplexBackend,
        BACKEND_SCIPY: _scipy_backend,
    }


def backend_names() -> List[str]:
    return list(lp_backends().keys())


def create_backend(name: str = DEFAULT_BACKEND) -> LpBackend:
    factory = lp_backends().get(name)
    if factory is None:
        raise UsageError(f"Unknown LP backend: {name}")
    return factory()


__all__ = [
    "BACKEND_SCIPY",
    "BACKEND_SIMPLEX",
    "DEFAULT_BACKEND",
    "DenseSimplexBackend",
    "FlowNetwork",
    "FractionalSolution",
    "LpBackend",
    "LpModel",
    "LpOutcome",
    "MaxFlowResult",
    "SubsetCut",
    "backend_names",
    "create_backend",
    "cutting_plane_solve",
    "default_iteration_cap",
    "dump_cuts",
    "max_flow",
    "minimize_through_edge",
    "separation_oracle",
    "solve_base_lp",
    "subset_lhs",
]
