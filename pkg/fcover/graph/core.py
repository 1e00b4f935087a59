# -*- coding: utf-8 -*-

from dataclasses import dataclass
from enum import Enum
from math import isfinite
from typing import Dict, Final, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from fcover.errors import InstanceError

EPSILON: Final[float] = 1e-9


class GraphMode(str, Enum):
    FC = "fc"
    """Forest cover instance, every weight in [0, 1]"""

    BFC = "bfc"
    """Bounded forest cover instance, every weight strictly positive"""


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    w: float

    @property
    def endpoints(self) -> Tuple[int, int]:
        return self.u, self.v

    def other(self, vertex: int) -> int:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise ValueError(f"Vertex {vertex} is not an endpoint of edge {self.id}")

    def touches(self, vertex: int) -> bool:
        return vertex == self.u or vertex == self.v


EdgeTuple = Tuple[int, int, float]


def check_weight(w: float, mode: GraphMode) -> None:
    if not isfinite(w):
        raise InstanceError(f"Edge weight must be finite: {w}")
    if mode == GraphMode.FC:
        if w < 0.0 or w > 1.0:
            raise InstanceError(f"FC edge weight must lie in [0, 1]: {w}")
    else:
        if w <= 0.0:
            raise InstanceError(f"BFC edge weight must be positive: {w}")


class Graph:
    """Undirected simple graph on the dense vertex ids ``0..n-1``.

    The i-th edge passed to the constructor gets id ``i``. Instances are
    immutable; derived graphs are built with :meth:`with_weights`.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[EdgeTuple] = (),
        mode: GraphMode = GraphMode.FC,
    ) -> None:
        if n < 0:
            raise InstanceError(f"Vertex count must be non-negative: {n}")

        self._n = n
        self._mode = GraphMode(mode)

        items: List[Edge] = []
        pairs: Dict[Tuple[int, int], int] = {}
        incident: List[List[int]] = [[] for _ in range(n)]

        for index, (u, v, w) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise InstanceError(f"Edge {index} has an endpoint out of range")
            if u == v:
                raise InstanceError(f"Edge {index} is a self-loop on vertex {u}")
            key = (min(u, v), max(u, v))
            if key in pairs:
                raise InstanceError(
                    f"Edge {index} duplicates edge {pairs[key]} ({key[0]}, {key[1]})"
                )
            w = float(w)
            check_weight(w, self._mode)
            pairs[key] = index
            items.append(Edge(index, u, v, w))
            incident[u].append(index)
            incident[v].append(index)

        self._edges: Tuple[Edge, ...] = tuple(items)
        self._pairs = pairs
        self._incident: Tuple[Tuple[int, ...], ...] = tuple(tuple(x) for x in incident)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m}, mode={self._mode.value})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and self._mode == other._mode
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self._n, self._mode, self._edges))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def mode(self) -> GraphMode:
        return self._mode

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def vertices(self) -> range:
        return range(self._n)

    def edge(self, edge_id: int) -> Edge:
        return self._edges[edge_id]

    def weight(self, edge_id: int) -> float:
        return self._edges[edge_id].w

    def incident(self, vertex: int) -> Tuple[int, ...]:
        return self._incident[vertex]

    def edge_between(self, u: int, v: int) -> Optional[int]:
        return self._pairs.get((min(u, v), max(u, v)))

    def induced_edges(self, vertices: Iterable[int]) -> List[int]:
        """Ids of the edges with both endpoints in ``vertices``, ascending"""
        inside: FrozenSet[int] = frozenset(vertices)
        return [e.id for e in self._edges if e.u in inside and e.v in inside]

    def weights(self) -> List[float]:
        return [e.w for e in self._edges]

    def edge_tuples(self) -> List[EdgeTuple]:
        return [(e.u, e.v, e.w) for e in self._edges]

    def with_weights(
        self,
        weights: Sequence[float],
        mode: Optional[GraphMode] = None,
    ) -> "Graph":
        """Same topology and edge ids, new weights"""
        if len(weights) != self.m:
            raise ValueError(f"Expected {self.m} weights, got {len(weights)}")
        return Graph(
            self._n,
            ((e.u, e.v, w) for e, w in zip(self._edges, weights)),
            self._mode if mode is None else mode,
        )

    def is_binary(self, tol: float = EPSILON) -> bool:
        return all(abs(e.w) <= tol or abs(e.w - 1.0) <= tol for e in self._edges)
