# -*- coding: utf-8 -*-

import numpy as np
from overrides import override
from scipy.optimize import linprog

from fcover.errors import SolverError
from fcover.lp.backend import LpBackend, LpOutcome


class ScipyBackend(LpBackend):
    """HiGHS dual simplex through :func:`scipy.optimize.linprog`"""

    name = "scipy"

    def __init__(self, method: str = "highs-ds") -> None:
        self.method = method

    @override
    def solve(self, c: np.ndarray, a: np.ndarray, b: np.ndarray) -> LpOutcome:
        num_vars = int(c.shape[0])
        if num_vars == 0:
            return LpOutcome(np.zeros(0), 0.0, 0)

        if a.shape[0]:
            result = linprog(
                c,
                A_ub=-a,
                b_ub=-b,
                bounds=[(0.0, 1.0)] * num_vars,
                method=self.method,
            )
        else:
            result = linprog(c, bounds=[(0.0, 1.0)] * num_vars, method=self.method)

        if result.status != 0:
            raise SolverError(f"linprog failed ({result.status}): {result.message}")

        z = np.clip(np.asarray(result.x, dtype=float), 0.0, 1.0)
        return LpOutcome(z, float(c @ z), int(getattr(result, "nit", 0)))
