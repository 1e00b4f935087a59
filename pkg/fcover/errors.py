# -*- coding: utf-8 -*-

from typing import Final

EXIT_CODE_SUCCESS: Final[int] = 0
EXIT_CODE_UNKNOWN: Final[int] = 1
EXIT_CODE_USAGE: Final[int] = 2
EXIT_CODE_INSTANCE: Final[int] = 3
EXIT_CODE_SOLVER: Final[int] = 4


class ForestCoverError(Exception):
    """Base class of every error raised by the fcover package"""

    exit_code = EXIT_CODE_SOLVER


class UsageError(ForestCoverError):
    """Invalid combination of command line options or parameters"""

    exit_code = EXIT_CODE_USAGE


class InstanceError(ForestCoverError, ValueError):
    """The instance violates a format rule or an algorithm precondition"""

    exit_code = EXIT_CODE_INSTANCE


class InvalidForestError(InstanceError):
    """A forest is not a set of vertex-disjoint trees of the graph"""


class SolverError(ForestCoverError, RuntimeError):
    """A solver failed to produce a result"""

    exit_code = EXIT_CODE_SOLVER


class BudgetExceededError(SolverError):
    """An exhaustive procedure was asked to run beyond its budget"""
