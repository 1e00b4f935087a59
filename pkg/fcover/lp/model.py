# -*- coding: utf-8 -*-

from dataclasses import dataclass, field, replace
from math import nan
from typing import Final, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from fcover.errors import InstanceError
from fcover.graph.core import Graph

DEFAULT_VIOLATION_TOL: Final[float] = 1e-7
DEFAULT_OBJECTIVE_TOL: Final[float] = 1e-6
SUPPORT_TOL: Final[float] = 1e-9


@dataclass(frozen=True)
class SubsetCut:
    """Subset constraint ``sum x_i (i in S) - sum y_e (e in E(S)) >= 1``"""

    vertices: FrozenSet[int]
    value: float = field(default=nan, compare=False)
    """Left-hand side at the point that produced the cut"""

    @classmethod
    def of(cls, vertices: Iterable[int], value: float = nan) -> "SubsetCut":
        return cls(frozenset(vertices), value)

    def sorted_vertices(self) -> List[int]:
        return sorted(self.vertices)


@dataclass(frozen=True)
class FractionalSolution:
    x: Tuple[float, ...]
    y: Tuple[float, ...]
    objective: float
    cuts: Tuple[SubsetCut, ...] = ()
    iterations: int = 0

    def with_pool(
        self, cuts: Sequence[SubsetCut], iterations: int
    ) -> "FractionalSolution":
        return replace(self, cuts=tuple(cuts), iterations=iterations)

    def support_vertices(self, tol: float = SUPPORT_TOL) -> List[int]:
        return [i for i, value in enumerate(self.x) if value > tol]

    def support_edges(self, tol: float = SUPPORT_TOL) -> List[int]:
        return [e for e, value in enumerate(self.y) if value > tol]


def subset_lhs(graph: Graph, x: Sequence[float], y: Sequence[float], vertices) -> float:
    inside = frozenset(vertices)
    return sum(x[i] for i in inside) - sum(y[e] for e in graph.induced_edges(inside))


class LpModel:
    """LP relaxation of forest cover over ``x`` (per vertex) and ``y`` (per edge).

    Variable order is ``x_0..x_{n-1}, y_0..y_{m-1}``; every variable lies in
    ``[0, 1]``. Constraints are kept in ``A z >= b`` form.
    """

    def __init__(self, graph: Graph, cuts: Iterable[SubsetCut] = ()) -> None:
        self._graph = graph
        self._cuts: List[SubsetCut] = []
        for cut in cuts:
            self.add_cut(cut)

    @property
    def graph(self) -> Graph:
        return self._graph

    @property
    def cuts(self) -> List[SubsetCut]:
        return list(self._cuts)

    @property
    def num_variables(self) -> int:
        return self._graph.n + self._graph.m

    def x_index(self, vertex: int) -> int:
        return vertex

    def y_index(self, edge_id: int) -> int:
        return self._graph.n + edge_id

    def add_cut(self, cut: SubsetCut) -> bool:
        """Append ``cut`` to the pool; ``False`` when it is already pooled"""
        if not self._graph.induced_edges(cut.vertices):
            raise InstanceError(
                f"Subset cut {cut.sorted_vertices()} induces no edge of the graph"
            )
        if cut in self._cuts:
            return False
        self._cuts.append(cut)
        return True

    def objective(self) -> np.ndarray:
        c = np.zeros(self.num_variables)
        c[: self._graph.n] = 1.0
        for edge in self._graph.edges:
            c[self.y_index(edge.id)] = -(1.0 - edge.w)
        return c

    def base_rows(self) -> Tuple[np.ndarray, np.ndarray]:
        """Cover rows ``x_u + x_v >= 1`` then linkage rows ``x_u - y_e >= 0``"""
        graph = self._graph
        rows = np.zeros((3 * graph.m, self.num_variables))
        rhs = np.zeros(3 * graph.m)
        for edge in graph.edges:
            cover = edge.id
            rows[cover, self.x_index(edge.u)] = 1.0
            rows[cover, self.x_index(edge.v)] = 1.0
            rhs[cover] = 1.0
            for offset, vertex in ((1, edge.u), (2, edge.v)):
                link = graph.m + 2 * edge.id + offset - 1
                rows[link, self.x_index(vertex)] = 1.0
                rows[link, self.y_index(edge.id)] = -1.0
        return rows, rhs

    def cut_rows(self) -> Tuple[np.ndarray, np.ndarray]:
        rows = np.zeros((len(self._cuts), self.num_variables))
        for index, cut in enumerate(self._cuts):
            for vertex in cut.vertices:
                rows[index, self.x_index(vertex)] = 1.0
            for edge_id in self._graph.induced_edges(cut.vertices):
                rows[index, self.y_index(edge_id)] = -1.0
        return rows, np.ones(len(self._cuts))

    def inequality_system(self) -> Tuple[np.ndarray, np.ndarray]:
        base, base_rhs = self.base_rows()
        cuts, cuts_rhs = self.cut_rows()
        return np.vstack([base, cuts]), np.concatenate([base_rhs, cuts_rhs])

    def split(self, z: Sequence[float]) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
        n = self._graph.n
        return tuple(float(v) for v in z[:n]), tuple(float(v) for v in z[n:])

    def max_violation(self, solution: FractionalSolution) -> float:
        """Largest amount by which ``solution`` misses a pooled or base row"""
        a, b = self.inequality_system()
        if a.shape[0] == 0:
            return 0.0
        z = np.concatenate([solution.x, solution.y])
        return float(max(0.0, np.max(b - a @ z)))
