# -*- coding: utf-8 -*-

from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Set, Union

from fcover.graph.core import Edge, Graph

VertexFilter = Union[Callable[[int], bool], Iterable[int], None]
EdgeFilter = Union[Callable[[Edge], bool], Iterable[int], None]


class UnionFind:
    """Disjoint sets with path halving and union by size"""

    def __init__(self, items: Iterable[int] = ()) -> None:
        self._parent: Dict[int, int] = {}
        self._size: Dict[int, int] = {}
        for item in items:
            self.add(item)

    def add(self, item: int) -> None:
        if item not in self._parent:
            self._parent[item] = item
            self._size[item] = 1

    def find(self, item: int) -> int:
        parent = self._parent
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    def union(self, a: int, b: int) -> bool:
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        return True

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)


class Component(NamedTuple):
    vertices: frozenset
    edges: frozenset


def select_vertices(graph: Graph, vertex_filter: VertexFilter = None) -> List[int]:
    if vertex_filter is None:
        return list(graph.vertices)
    if callable(vertex_filter):
        return [v for v in graph.vertices if vertex_filter(v)]
    chosen = set(vertex_filter)
    return [v for v in graph.vertices if v in chosen]


def select_edges(
    graph: Graph,
    vertices: Iterable[int],
    edge_filter: EdgeFilter = None,
) -> List[Edge]:
    """Edges passing ``edge_filter`` whose endpoints both lie in ``vertices``"""
    inside = set(vertices)
    if edge_filter is None:
        candidates: Iterable[Edge] = graph.edges
    elif callable(edge_filter):
        candidates = (e for e in graph.edges if edge_filter(e))
    else:
        allowed = set(edge_filter)
        candidates = (e for e in graph.edges if e.id in allowed)
    return [e for e in candidates if e.u in inside and e.v in inside]


def connected_components(
    graph: Graph,
    vertex_filter: VertexFilter = None,
    edge_filter: EdgeFilter = None,
) -> List[Component]:
    """Maximal connected vertex sets of the filtered subgraph.

    Components are ordered by their smallest vertex id.
    """
    vertices = select_vertices(graph, vertex_filter)
    edges = select_edges(graph, vertices, edge_filter)

    sets = UnionFind(vertices)
    for e in edges:
        sets.union(e.u, e.v)

    members: Dict[int, Set[int]] = {}
    links: Dict[int, Set[int]] = {}
    for v in vertices:
        root = sets.find(v)
        members.setdefault(root, set()).add(v)
        links.setdefault(root, set())
    for e in edges:
        links[sets.find(e.u)].add(e.id)

    result = [Component(frozenset(members[r]), frozenset(links[r])) for r in members]
    result.sort(key=lambda c: min(c.vertices))
    return result


def is_connected(
    graph: Graph,
    vertices: Iterable[int],
    edge_filter: Optional[EdgeFilter] = None,
) -> bool:
    chosen = list(vertices)
    if not chosen:
        return True
    return len(connected_components(graph, chosen, edge_filter)) == 1
