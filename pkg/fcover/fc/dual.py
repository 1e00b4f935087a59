# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Tuple

from fcover.graph.core import EPSILON, Graph

VertexEdge = Tuple[int, int]


@dataclass(frozen=True)
class DualCertificate:
    """Dual point of the forest cover LP.

    ``z_e`` prices cover rows, ``z_ue`` the linkage rows keyed by
    ``(vertex, edge id)``, ``z_sets`` the subset rows.
    """

    z_e: Dict[int, float] = field(default_factory=dict)
    z_ue: Dict[VertexEdge, float] = field(default_factory=dict)
    z_sets: Tuple[Tuple[FrozenSet[int], float], ...] = ()

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> "DualCertificate":
        return cls(z_sets=tuple((frozenset(s), 1.0) for s in sets))

    @property
    def bound(self) -> float:
        return sum(self.z_e.values()) + sum(value for _, value in self.z_sets)

    def sets_disjoint(self) -> bool:
        seen: set = set()
        for vertices, value in self.z_sets:
            if value <= 0.0:
                continue
            if seen.intersection(vertices):
                return False
            seen.update(vertices)
        return True


def check_dual_feasibility(
    graph: Graph, cert: DualCertificate, tol: float = EPSILON
) -> bool:
    values = list(cert.z_e.values()) + list(cert.z_ue.values())
    values.extend(value for _, value in cert.z_sets)
    if any(value < -tol for value in values):
        return False

    for edge_id in cert.z_e:
        if not (0 <= edge_id < graph.m):
            return False
    for vertex, edge_id in cert.z_ue:
        if not (0 <= edge_id < graph.m) or not graph.edge(edge_id).touches(vertex):
            return False
    for vertices, _ in cert.z_sets:
        if not graph.induced_edges(vertices):
            return False

    load = [0.0] * graph.n
    for edge_id, value in cert.z_e.items():
        edge = graph.edge(edge_id)
        load[edge.u] += value
        load[edge.v] += value
    for (vertex, _), value in cert.z_ue.items():
        load[vertex] += value
    for vertices, value in cert.z_sets:
        for vertex in vertices:
            load[vertex] += value
    if any(total > 1.0 + tol for total in load):
        return False

    for edge in graph.edges:
        total = cert.z_ue.get((edge.u, edge.id), 0.0)
        total += cert.z_ue.get((edge.v, edge.id), 0.0)
        total += sum(
            value
            for vertices, value in cert.z_sets
            if edge.u in vertices and edge.v in vertices
        )
        if total < 1.0 - edge.w - tol:
            return False
    return True
