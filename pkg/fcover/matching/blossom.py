# -*- coding: utf-8 -*-

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from fcover.graph.components import select_edges, select_vertices
from fcover.graph.core import Graph

UNMATCHED = -1


@dataclass(frozen=True)
class Matching:
    edges: FrozenSet[int]

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def pairs(self, graph: Graph) -> List[Tuple[int, int]]:
        result = []
        for edge_id in sorted(self.edges):
            edge = graph.edge(edge_id)
            result.append((edge.u, edge.v))
        return result


def is_matching(graph: Graph, edges: Iterable[int]) -> bool:
    seen: set = set()
    for edge_id in edges:
        edge = graph.edge(edge_id)
        if edge.u in seen or edge.v in seen:
            return False
        seen.add(edge.u)
        seen.add(edge.v)
    return True


class _BlossomSearch:
    """Edmonds' augmenting path search with odd-cycle contraction.

    Vertices are local indices ``0..k-1``; adjacency lists are ascending so
    the search visits vertices in ascending id order.
    """

    def __init__(self, adjacency: Sequence[Sequence[int]]) -> None:
        self.adjacency = adjacency
        self.size = len(adjacency)
        self.match: List[int] = [UNMATCHED] * self.size
        self.parent: List[int] = []
        self.base: List[int] = []
        self.used: List[bool] = []
        self.blossom: List[bool] = []

    def _lowest_common_ancestor(self, a: int, b: int) -> int:
        visited = [False] * self.size
        while True:
            a = self.base[a]
            visited[a] = True
            if self.match[a] == UNMATCHED:
                break
            a = self.parent[self.match[a]]
        while True:
            b = self.base[b]
            if visited[b]:
                return b
            b = self.parent[self.match[b]]

    def _mark_path(self, v: int, b: int, child: int) -> None:
        while self.base[v] != b:
            self.blossom[self.base[v]] = True
            self.blossom[self.base[self.match[v]]] = True
            self.parent[v] = child
            child = self.match[v]
            v = self.parent[self.match[v]]

    def find_path(self, root: int) -> int:
        """Exposed endpoint of an augmenting path from ``root``, or -1"""
        self.used = [False] * self.size
        self.parent = [UNMATCHED] * self.size
        self.base = list(range(self.size))

        self.used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in self.adjacency[v]:
                if self.base[v] == self.base[to] or self.match[v] == to:
                    continue
                if to == root or (
                    self.match[to] != UNMATCHED
                    and self.parent[self.match[to]] != UNMATCHED
                ):
                    current = self._lowest_common_ancestor(v, to)
                    self.blossom = [False] * self.size
                    self._mark_path(v, current, to)
                    self._mark_path(to, current, v)
                    for i in range(self.size):
                        if self.blossom[self.base[i]]:
                            self.base[i] = current
                            if not self.used[i]:
                                self.used[i] = True
                                queue.append(i)
                elif self.parent[to] == UNMATCHED:
                    self.parent[to] = v
                    if self.match[to] == UNMATCHED:
                        return to
                    self.used[self.match[to]] = True
                    queue.append(self.match[to])
        return UNMATCHED

    def augment(self, end: int) -> None:
        v = end
        while v != UNMATCHED:
            pv = self.parent[v]
            ppv = self.match[pv]
            self.match[v] = pv
            self.match[pv] = v
            v = ppv

    def path_to(self, end: int) -> List[int]:
        """Alternating path from the search root to ``end`` (local ids)"""
        path = [end]
        v = end
        while True:
            pv = self.parent[v]
            path.append(pv)
            if self.match[pv] == UNMATCHED:
                break
            v = self.match[pv]
            path.append(v)
        path.reverse()
        return path


class _LocalView:
    def __init__(
        self,
        graph: Graph,
        vertices: Optional[Iterable[int]],
        edges: Optional[Iterable[int]],
    ) -> None:
        self.vertices = select_vertices(graph, vertices)
        self.index: Dict[int, int] = {v: i for i, v in enumerate(self.vertices)}
        self.edge_of: Dict[Tuple[int, int], int] = {}

        adjacency: List[List[int]] = [[] for _ in self.vertices]
        for edge in select_edges(graph, self.vertices, edges):
            a = self.index[edge.u]
            b = self.index[edge.v]
            adjacency[a].append(b)
            adjacency[b].append(a)
            self.edge_of[(min(a, b), max(a, b))] = edge.id
        for neighbors in adjacency:
            neighbors.sort()
        self.adjacency = adjacency

    def edge_id(self, a: int, b: int) -> int:
        return self.edge_of[(min(a, b), max(a, b))]

    def matching_edges(self, match: Sequence[int]) -> FrozenSet[int]:
        return frozenset(
            self.edge_id(a, b) for a, b in enumerate(match) if b != UNMATCHED and a < b
        )


def maximum_matching(
    graph: Graph,
    vertices: Optional[Iterable[int]] = None,
    edges: Optional[Iterable[int]] = None,
) -> Matching:
    """Maximum cardinality matching of the selected subgraph"""
    view = _LocalView(graph, vertices, edges)
    search = _BlossomSearch(view.adjacency)

    # Greedy start in ascending order; augmentations complete it to maximum.
    for a, neighbors in enumerate(view.adjacency):
        if search.match[a] != UNMATCHED:
            continue
        for b in neighbors:
            if search.match[b] == UNMATCHED:
                search.match[a] = b
                search.match[b] = a
                break

    for root in range(search.size):
        if search.match[root] == UNMATCHED:
            end = search.find_path(root)
            if end != UNMATCHED:
                search.augment(end)

    return Matching(view.matching_edges(search.match))


def find_augmenting_path(
    graph: Graph,
    matching: Matching,
    vertices: Optional[Iterable[int]] = None,
    edges: Optional[Iterable[int]] = None,
) -> Optional[List[int]]:
    """Augmenting path (graph vertex ids) for ``matching``, if one exists"""
    view = _LocalView(graph, vertices, edges)
    search = _BlossomSearch(view.adjacency)
    for edge_id in matching.edges:
        edge = graph.edge(edge_id)
        a = view.index[edge.u]
        b = view.index[edge.v]
        search.match[a] = b
        search.match[b] = a

    for root in range(search.size):
        if search.match[root] != UNMATCHED:
            continue
        end = search.find_path(root)
        if end != UNMATCHED:
            return [view.vertices[i] for i in search.path_to(end)]
    return None
