# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from fcover.errors import InvalidForestError
from fcover.graph.components import UnionFind
from fcover.graph.core import EPSILON, Graph


@dataclass(frozen=True)
class Tree:
    vertices: FrozenSet[int]
    edges: FrozenSet[int]

    @classmethod
    def of(cls, vertices: Iterable[int], edges: Iterable[int] = ()) -> "Tree":
        return cls(frozenset(vertices), frozenset(edges))

    @classmethod
    def singleton(cls, vertex: int) -> "Tree":
        return cls(frozenset((vertex,)), frozenset())

    @property
    def root(self) -> int:
        """Smallest vertex id, used for deterministic ordering"""
        return min(self.vertices)

    def weight(self, weights: Sequence[float]) -> float:
        return sum(weights[e] for e in self.edges)

    def sorted_vertices(self) -> List[int]:
        return sorted(self.vertices)

    def sorted_edges(self) -> List[int]:
        return sorted(self.edges)


@dataclass(frozen=True)
class Forest:
    trees: Tuple[Tree, ...] = ()

    @classmethod
    def of(cls, trees: Iterable[Tree]) -> "Forest":
        """Canonical forest: trees ordered by their smallest vertex id"""
        return cls(tuple(sorted(trees, key=lambda t: t.root)))

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    @property
    def k(self) -> int:
        return len(self.trees)

    @property
    def vertices(self) -> FrozenSet[int]:
        result: set = set()
        for tree in self.trees:
            result.update(tree.vertices)
        return frozenset(result)

    @property
    def edges(self) -> FrozenSet[int]:
        result: set = set()
        for tree in self.trees:
            result.update(tree.edges)
        return frozenset(result)


def validate_tree(graph: Graph, tree: Tree, index: int = 0) -> None:
    if not tree.vertices:
        raise InvalidForestError(f"Tree {index} has no vertices")
    for v in tree.vertices:
        if not (0 <= v < graph.n):
            raise InvalidForestError(f"Tree {index} has unknown vertex {v}")
    if len(tree.edges) != len(tree.vertices) - 1:
        raise InvalidForestError(
            f"Tree {index} has {len(tree.vertices)} vertices "
            f"but {len(tree.edges)} edges"
        )

    sets = UnionFind(tree.vertices)
    for edge_id in tree.edges:
        if not (0 <= edge_id < graph.m):
            raise InvalidForestError(f"Tree {index} has unknown edge {edge_id}")
        edge = graph.edge(edge_id)
        if edge.u not in tree.vertices or edge.v not in tree.vertices:
            raise InvalidForestError(
                f"Tree {index} has dangling edge {edge_id} ({edge.u}, {edge.v})"
            )
        if not sets.union(edge.u, edge.v):
            raise InvalidForestError(f"Tree {index} has a cycle through {edge_id}")


def validate_forest(graph: Graph, forest: Forest) -> None:
    """Raise :class:`InvalidForestError` unless the trees are disjoint trees"""
    seen: set = set()
    for index, tree in enumerate(forest.trees):
        validate_tree(graph, tree, index)
        overlap = seen.intersection(tree.vertices)
        if overlap:
            raise InvalidForestError(
                f"Tree {index} overlaps an earlier tree on {sorted(overlap)}"
            )
        seen.update(tree.vertices)


def weighted_index(graph: Graph, forest: Forest) -> float:
    """Sum of forest edge weights plus the number of trees"""
    validate_forest(graph, forest)
    value = sum(graph.weight(e) for t in forest for e in t.edges) + forest.k
    assert abs(value - weighted_index_by_vertices(graph, forest)) <= EPSILON * max(
        1.0, float(graph.m)
    )
    return value


def weighted_index_by_vertices(graph: Graph, forest: Forest) -> float:
    """Equivalent form: vertex count minus the savings ``1 - w_e`` of the edges"""
    vertices = sum(len(t.vertices) for t in forest)
    savings = sum(1.0 - graph.weight(e) for t in forest for e in t.edges)
    return vertices - savings


def covers(graph: Graph, vertices: Iterable[int]) -> bool:
    chosen = set(vertices)
    return all(e.u in chosen or e.v in chosen for e in graph.edges)


def uncovered_edges(graph: Graph, vertices: Iterable[int]) -> List[int]:
    chosen = set(vertices)
    return [e.id for e in graph.edges if e.u not in chosen and e.v not in chosen]


def is_forest_cover(graph: Graph, forest: Forest) -> bool:
    validate_forest(graph, forest)
    return covers(graph, forest.vertices)
