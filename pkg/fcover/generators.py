# -*- coding: utf-8 -*-

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Final, Iterable, List, Tuple

import numpy as np

from fcover.errors import UsageError
from fcover.graph.core import EdgeTuple, Graph, GraphMode

KIND_GNP_UNIFORM: Final[str] = "gnp-uniform"
KIND_GNP_BINARY: Final[str] = "gnp-binary"
KIND_GNP_RAW: Final[str] = "gnp-raw"
KIND_FROM_VC: Final[str] = "from-vc"
KIND_PATH: Final[str] = "path"
KIND_STAR: Final[str] = "star"
KIND_CYCLE: Final[str] = "cycle"
KIND_TREE: Final[str] = "tree"


@dataclass(frozen=True)
class GeneratorParams:
    n: int
    p: float = 0.5
    """Edge probability of the G(n, p) kinds"""
    bias: float = 0.5
    """Probability of weight 1 for ``gnp-binary``"""
    scale: float = 1.0
    """Upper weight bound for ``gnp-raw`` and ``tree``"""
    weight: float = 1.0
    """Edge weight of the path, star and cycle fixtures"""

    def validate(self) -> None:
        if self.n < 0:
            raise UsageError(f"n must be non-negative: {self.n}")
        if not (0.0 <= self.p <= 1.0):
            raise UsageError(f"p must lie in [0, 1]: {self.p}")
        if not (0.0 <= self.bias <= 1.0):
            raise UsageError(f"bias must lie in [0, 1]: {self.bias}")
        if self.scale <= 0.0:
            raise UsageError(f"scale must be positive: {self.scale}")
        if self.weight < 0.0:
            raise UsageError(f"weight must be non-negative: {self.weight}")


def gnp_pairs(n: int, p: float, rng: np.random.Generator) -> List[Tuple[int, int]]:
    """Pairs ``u < v`` in lexicographic order, each kept with probability ``p``"""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    coins = rng.random(len(pairs))
    return [pair for pair, coin in zip(pairs, coins) if coin < p]


def from_vertex_cover(n: int, pairs: Iterable[Tuple[int, int]]) -> Graph:
    """Unit weights: the optimum weighted index equals the minimum cover size"""
    return Graph(n, [(u, v, 1.0) for u, v in pairs], GraphMode.FC)


def _fixture_mode(weight: float) -> GraphMode:
    return GraphMode.FC if weight <= 1.0 else GraphMode.BFC


def _gnp_uniform(params: GeneratorParams, rng: np.random.Generator) -> Graph:
    pairs = gnp_pairs(params.n, params.p, rng)
    weights = rng.random(len(pairs))
    return Graph(params.n, [(u, v, float(w)) for (u, v), w in zip(pairs, weights)])


def _gnp_binary(params: GeneratorParams, rng: np.random.Generator) -> Graph:
    pairs = gnp_pairs(params.n, params.p, rng)
    coins = rng.random(len(pairs))
    edges = [(u, v, 1.0 if c < params.bias else 0.0) for (u, v), c in zip(pairs, coins)]
    return Graph(params.n, edges)


def _gnp_raw(params: GeneratorParams, rng: np.random.Generator) -> Graph:
    pairs = gnp_pairs(params.n, params.p, rng)
    weights = params.scale * (1.0 - rng.random(len(pairs)))
    edges = [(u, v, float(w)) for (u, v), w in zip(pairs, weights)]
    return Graph(params.n, edges, GraphMode.BFC)


def _from_vc(params: GeneratorParams, rng: np.random.Generator) -> Graph:
    return from_vertex_cover(params.n, gnp_pairs(params.n, params.p, rng))


def _path(params: GeneratorParams, rng: np.random.Generator) -> Graph:
    edges = [(i, i + 1, params.weight) for i in range(params.n - 1)]
    return Graph(params.n, edges, _fixture_mode(params.weight))


def _star(params: GeneratorParams, rng: np.random.Generator) -> Graph:
    edges = [(0, i, params.weight) for i in range(1, params.n)]
    return Graph(params.n, edges, _fixture_mode(params.weight))


def _cycle(params: GeneratorParams, rng: np.random.Generator) -> Graph:
    if params.n < 3:
        raise UsageError(f"A cycle needs at least 3 vertices: {params.n}")
    edges = [(i, (i + 1) % params.n, params.weight) for i in range(params.n)]
    return Graph(params.n, edges, _fixture_mode(params.weight))


def _tree(params: GeneratorParams, rng: np.random.Generator) -> Graph:
    edges: List[EdgeTuple] = []
    for v in range(1, params.n):
        parent = int(rng.integers(0, v))
        edges.append((parent, v, float(params.scale * (1.0 - rng.random()))))
    return Graph(params.n, edges, _fixture_mode(params.scale))


@lru_cache
def generators() -> Dict[str, Callable[[GeneratorParams, np.random.Generator], Graph]]:
    return {
        KIND_GNP_UNIFORM: _gnp_uniform,
        KIND_GNP_BINARY: _gnp_binary,
        KIND_GNP_RAW: _gnp_raw,
        KIND_FROM_VC: _from_vc,
        KIND_PATH: _path,
        KIND_STAR: _star,
        KIND_CYCLE: _cycle,
        KIND_TREE: _tree,
    }


def generator_kinds() -> List[str]:
    return list(generators().keys())


def generate(kind: str, params: GeneratorParams, seed: int) -> Graph:
    """Instance of ``kind``; the same seed always yields the same graph"""
    factory = generators().get(kind)
    if factory is None:
        raise UsageError(f"Unknown generator kind: {kind}")
    params.validate()
    return factory(params, np.random.default_rng(seed))
