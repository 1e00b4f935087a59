# -*- coding: utf-8 -*-

from abc import ABC, abstractmethod
from typing import NamedTuple

import numpy as np


class LpOutcome(NamedTuple):
    z: np.ndarray
    objective: float
    pivots: int


class LpBackend(ABC):
    """Solves ``min c z`` subject to ``A z >= b`` and ``0 <= z <= 1``"""

    name = "abstract"

    @abstractmethod
    def solve(self, c: np.ndarray, a: np.ndarray, b: np.ndarray) -> LpOutcome:
        raise NotImplementedError
