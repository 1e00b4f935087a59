# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from typing import Any, Dict, Final, Optional, Tuple

from fcover.errors import InvalidForestError
from fcover.graph.core import EPSILON, Graph
from fcover.graph.forest import Forest, is_forest_cover, weighted_index
from fcover.lp.model import FractionalSolution

METHOD_EXACT: Final[str] = "exact"
METHOD_BINARY: Final[str] = "binary"
METHOD_RANDOM: Final[str] = "random"
METHOD_ROUND: Final[str] = "round"


def primal_vectors(
    graph: Graph, forest: Forest
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """0/1 indicator vectors of the forest's vertices and edges"""
    vertices = forest.vertices
    edges = forest.edges
    x = tuple(1 if v in vertices else 0 for v in graph.vertices)
    y = tuple(1 if e.id in edges else 0 for e in graph.edges)
    return x, y


@dataclass(frozen=True)
class FcResult:
    forest: Forest
    wi: float
    method: str
    lower_bound: Optional[float] = None
    diagnostics: Dict[str, Any] = field(default_factory=dict, compare=False)
    relaxation: Optional[FractionalSolution] = field(default=None, compare=False)
    """LP optimum the forest was rounded from"""

    @classmethod
    def build(
        cls,
        graph: Graph,
        forest: Forest,
        method: str,
        lower_bound: Optional[float] = None,
        diagnostics: Optional[Dict[str, Any]] = None,
        relaxation: Optional[FractionalSolution] = None,
    ) -> "FcResult":
        if not is_forest_cover(graph, forest):
            raise InvalidForestError(f"Method {method} produced a non-covering forest")
        wi = weighted_index(graph, forest)
        if lower_bound is not None and lower_bound > wi + 1e-6:
            raise InvalidForestError(
                f"Method '{method}' reports lower bound {lower_bound} above wi {wi}"
            )
        return cls(
            forest, wi, method, lower_bound, dict(diagnostics or {}), relaxation
        )

    @property
    def k(self) -> int:
        return self.forest.k

    def ratio(self) -> Optional[float]:
        """``wi`` over the lower bound, when a positive bound exists"""
        if self.lower_bound is None or self.lower_bound <= EPSILON:
            return None
        return self.wi / self.lower_bound

    def vectors(self, graph: Graph) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return primal_vectors(graph, self.forest)
