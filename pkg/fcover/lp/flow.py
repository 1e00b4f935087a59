# -*- coding: utf-8 -*-

from collections import deque
from math import isinf
from typing import Final, FrozenSet, List, NamedTuple

FLOW_TOL: Final[float] = 1e-12


class MaxFlowResult(NamedTuple):
    value: float
    source_side: FrozenSet[int]
    """Nodes reachable from the source in the final residual network"""
    cut_capacity: float


class FlowNetwork:
    """Directed network stored as paired forward/reverse arcs.

    Arc ``2k`` is the k-th added arc and ``2k + 1`` its residual twin.
    Capacities may be ``math.inf``.
    """

    def __init__(self, num_nodes: int) -> None:
        self._num_nodes = num_nodes
        self._head: List[int] = []
        self._cap: List[float] = []
        self._out: List[List[int]] = [[] for _ in range(num_nodes)]
        self._original: List[float] = []

    @property
    def num_nodes(self) -> int:
        return self._num_nodes

    def add_node(self) -> int:
        self._out.append([])
        self._num_nodes += 1
        return self._num_nodes - 1

    def add_arc(self, tail: int, head: int, capacity: float) -> int:
        if capacity < 0.0:
            raise ValueError(f"Negative capacity on arc {tail}->{head}: {capacity}")
        index = len(self._head)
        self._head.extend((head, tail))
        self._cap.extend((capacity, 0.0))
        self._original.extend((capacity, 0.0))
        self._out[tail].append(index)
        self._out[head].append(index + 1)
        return index

    def arcs(self):
        for index in range(0, len(self._head), 2):
            yield self._head[index + 1], self._head[index], self._original[index]

    def _levels(self, source: int, sink: int) -> List[int]:
        level = [-1] * self._num_nodes
        level[source] = 0
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for arc in self._out[node]:
                head = self._head[arc]
                if level[head] < 0 and self._cap[arc] > FLOW_TOL:
                    level[head] = level[node] + 1
                    queue.append(head)
        return level

    def _blocking_flow(self, source: int, sink: int, level: List[int]) -> float:
        cursor = [0] * self._num_nodes
        total = 0.0
        while True:
            # iterative DFS along the level graph
            path: List[int] = []
            node = source
            while node != sink:
                arcs = self._out[node]
                advanced = False
                while cursor[node] < len(arcs):
                    arc = arcs[cursor[node]]
                    head = self._head[arc]
                    if self._cap[arc] > FLOW_TOL and level[head] == level[node] + 1:
                        path.append(arc)
                        node = head
                        advanced = True
                        break
                    cursor[node] += 1
                if advanced:
                    continue
                if not path:
                    return total
                level[node] = -1
                arc = path.pop()
                node = self._head[arc ^ 1]
                cursor[node] += 1

            pushed = min(self._cap[arc] for arc in path)
            if isinf(pushed):
                raise ValueError("Infinite capacity path from source to sink")
            for arc in path:
                self._cap[arc] -= pushed
                self._cap[arc ^ 1] += pushed
            total += pushed

    def _reachable(self, source: int) -> FrozenSet[int]:
        seen = {source}
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for arc in self._out[node]:
                head = self._head[arc]
                if head not in seen and self._cap[arc] > FLOW_TOL:
                    seen.add(head)
                    queue.append(head)
        return frozenset(seen)

    def cut_capacity(self, source_side: FrozenSet[int]) -> float:
        total = 0.0
        for tail, head, capacity in self.arcs():
            if tail in source_side and head not in source_side:
                total += capacity
        return total

    def max_flow(self, source: int, sink: int) -> MaxFlowResult:
        """Dinic's algorithm; the network keeps its final residual state"""
        if source == sink:
            raise ValueError("Source and sink must differ")
        value = 0.0
        while True:
            level = self._levels(source, sink)
            if level[sink] < 0:
                break
            value += self._blocking_flow(source, sink, level)
        side = self._reachable(source)
        return MaxFlowResult(value, side, self.cut_capacity(side))


def max_flow(network: FlowNetwork, source: int, sink: int) -> MaxFlowResult:
    return network.max_flow(source, sink)


__all__ = ["FlowNetwork", "MaxFlowResult", "max_flow"]
