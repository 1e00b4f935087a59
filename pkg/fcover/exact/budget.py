# -*- coding: utf-8 -*-

from dataclasses import dataclass

from fcover.errors import BudgetExceededError
from fcover.graph.core import Graph


@dataclass(frozen=True)
class ExactBudget:
    max_n: int
    max_edges: int

    def fits(self, graph: Graph) -> bool:
        return graph.n <= self.max_n and graph.m <= self.max_edges

    def check(self, graph: Graph, what: str) -> None:
        if graph.n > self.max_n:
            raise BudgetExceededError(
                f"{what} is limited to {self.max_n} vertices, got {graph.n}"
            )
        if graph.m > self.max_edges:
            raise BudgetExceededError(
                f"{what} is limited to {self.max_edges} edges, got {graph.m}"
            )


FC_BUDGET = ExactBudget(max_n=8, max_edges=28)
BFC_BUDGET = ExactBudget(max_n=7, max_edges=21)
SEPARATION_BUDGET = ExactBudget(max_n=10, max_edges=45)
VERTEX_COVER_BUDGET = ExactBudget(max_n=20, max_edges=190)
