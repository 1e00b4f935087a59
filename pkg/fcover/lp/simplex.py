# -*- coding: utf-8 -*-

from typing import Final, List

import numpy as np
from overrides import override

from fcover.errors import SolverError
from fcover.lp.backend import LpBackend, LpOutcome

PIVOT_TOL: Final[float] = 1e-9
FEASIBILITY_TOL: Final[float] = 1e-7
RATIO_TIE_TOL: Final[float] = 1e-12
DEFAULT_MAX_PIVOTS: Final[int] = 200_000


def _pivot(tableau: np.ndarray, basis: List[int], row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    factors = tableau[:, col].copy()
    factors[row] = 0.0
    tableau -= np.outer(factors, tableau[row])
    basis[row] = col


class DenseSimplexBackend(LpBackend):
    """Two-phase tableau simplex with Bland's anti-cycling rule.

    Column layout: ``z`` (N) | surplus or slack per ``>=`` row (R) |
    upper-bound slack per variable (N) | artificial (K) | rhs.
    """

    name = "simplex"

    def __init__(
        self,
        pivot_tol: float = PIVOT_TOL,
        max_pivots: int = DEFAULT_MAX_PIVOTS,
    ) -> None:
        self.pivot_tol = pivot_tol
        self.max_pivots = max_pivots

    def _iterate(self, tableau: np.ndarray, basis: List[int], allowed: int) -> int:
        tol = self.pivot_tol
        pivots = 0
        while True:
            entering = np.nonzero(tableau[-1, :allowed] < -tol)[0]
            if entering.size == 0:
                return pivots
            col = int(entering[0])

            column = tableau[:-1, col]
            candidates = np.nonzero(column > tol)[0]
            if candidates.size == 0:
                raise SolverError("The linear program is unbounded")
            ratios = tableau[candidates, -1] / column[candidates]
            ties = candidates[ratios <= ratios.min() + RATIO_TIE_TOL]
            row = int(min(ties, key=lambda r: basis[r]))

            _pivot(tableau, basis, row, col)
            pivots += 1
            if pivots > self.max_pivots:
                raise SolverError(f"Simplex exceeded {self.max_pivots} pivots")

    @override
    def solve(self, c: np.ndarray, a: np.ndarray, b: np.ndarray) -> LpOutcome:
        num_vars = int(c.shape[0])
        if num_vars == 0:
            return LpOutcome(np.zeros(0), 0.0, 0)

        num_ge = int(a.shape[0])
        needs_artificial = [i for i in range(num_ge) if b[i] > 0.0]
        num_art = len(needs_artificial)
        num_rows = num_ge + num_vars
        slack_start = num_vars
        bound_start = num_vars + num_ge
        art_start = bound_start + num_vars
        num_cols = art_start + num_art

        tableau = np.zeros((num_rows + 1, num_cols + 1))
        basis: List[int] = [0] * num_rows

        art_col = art_start
        for i in range(num_ge):
            if b[i] > 0.0:
                tableau[i, :num_vars] = a[i]
                tableau[i, slack_start + i] = -1.0
                tableau[i, art_col] = 1.0
                tableau[i, -1] = b[i]
                basis[i] = art_col
                art_col += 1
            else:
                tableau[i, :num_vars] = -a[i]
                tableau[i, slack_start + i] = 1.0
                tableau[i, -1] = -b[i]
                basis[i] = slack_start + i
        for j in range(num_vars):
            row = num_ge + j
            tableau[row, j] = 1.0
            tableau[row, bound_start + j] = 1.0
            tableau[row, -1] = 1.0
            basis[row] = bound_start + j

        pivots = 0
        if num_art:
            tableau[-1, art_start:num_cols] = 1.0
            for i in needs_artificial:
                tableau[-1] -= tableau[i]
            pivots += self._iterate(tableau, basis, num_cols)
            if -tableau[-1, -1] > FEASIBILITY_TOL:
                raise SolverError(
                    f"The linear program is infeasible (phase one {-tableau[-1, -1]})"
                )

            redundant: List[int] = []
            for i in range(num_rows):
                if basis[i] < art_start:
                    continue
                nonzero = np.nonzero(np.abs(tableau[i, :art_start]) > self.pivot_tol)[0]
                if nonzero.size:
                    _pivot(tableau, basis, i, int(nonzero[0]))
                    pivots += 1
                else:
                    redundant.append(i)
            if redundant:
                tableau = np.delete(tableau, redundant, axis=0)
                basis = [col for i, col in enumerate(basis) if i not in redundant]
            tableau = np.delete(tableau, np.arange(art_start, num_cols), axis=1)

        tableau[-1] = 0.0
        tableau[-1, :num_vars] = c
        for i, col in enumerate(basis):
            if tableau[-1, col] != 0.0:
                tableau[-1] -= tableau[-1, col] * tableau[i]
        pivots += self._iterate(tableau, basis, art_start)

        z = np.zeros(num_vars)
        for i, col in enumerate(basis):
            if col < num_vars:
                z[col] = tableau[i, -1]
        z = np.clip(z, 0.0, 1.0)
        return LpOutcome(z, float(c @ z), pivots)
