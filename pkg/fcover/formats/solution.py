# -*- coding: utf-8 -*-

from dataclasses import dataclass
from io import StringIO
from typing import Final, Iterable, List, Optional, Tuple

from fcover.errors import InstanceError
from fcover.graph.core import GraphMode
from fcover.graph.forest import Tree

SOLUTION: Final[str] = "s"
TREE: Final[str] = "t"
SEPARATOR: Final[str] = ";"


@dataclass(frozen=True)
class SolutionFile:
    kind: GraphMode
    n: int
    trees: Tuple[Tree, ...]


def _ids(tokens: List[str], what: str, line_no: int) -> List[int]:
    result = []
    for token in tokens:
        try:
            value = int(token)
        except ValueError:
            raise InstanceError(f"Line {line_no}: {what} is not an integer: {token!r}")
        if value < 1:
            raise InstanceError(f"Line {line_no}: {what} ids start at 1: {value}")
        result.append(value - 1)
    return result


def parse_solution(text: str) -> SolutionFile:
    """Read ``s <kind> <n> <count>`` then ``t <vertices> ; <edge ids>`` lines"""
    header: Optional[Tuple[GraphMode, int, int]] = None
    trees: List[Tree] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == SOLUTION:
            if header is not None or len(tokens) != 4:
                raise InstanceError(f"Line {line_no}: bad solution header")
            try:
                kind = GraphMode(tokens[1])
                n, count = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise InstanceError(f"Line {line_no}: bad solution header")
            header = (kind, n, count)
        elif tokens[0] == TREE:
            if header is None:
                raise InstanceError(f"Line {line_no}: tree before the solution header")
            body = tokens[1:]
            if SEPARATOR in body:
                split = body.index(SEPARATOR)
                vertex_tokens, edge_tokens = body[:split], body[split + 1 :]
            else:
                vertex_tokens, edge_tokens = body, []
            vertices = _ids(vertex_tokens, "vertex", line_no)
            edges = _ids(edge_tokens, "edge", line_no)
            if len(set(vertices)) != len(vertices) or len(set(edges)) != len(edges):
                raise InstanceError(f"Line {line_no}: repeated id in tree")
            trees.append(Tree.of(vertices, edges))
        else:
            raise InstanceError(f"Line {line_no}: unknown record {tokens[0]!r}")

    if header is None:
        raise InstanceError("Missing solution header 's <kind> <n> <count>'")
    kind, n, count = header
    if count != len(trees):
        raise InstanceError(f"Header declares {count} trees, found {len(trees)}")
    return SolutionFile(kind, n, tuple(trees))


def emit_solution(kind: GraphMode, n: int, trees: Iterable[Tree]) -> str:
    items = list(trees)
    buffer = StringIO()
    buffer.write(f"s {GraphMode(kind).value} {n} {len(items)}\n")
    for tree in items:
        vertices = " ".join(str(v + 1) for v in tree.sorted_vertices())
        edges = " ".join(str(e + 1) for e in tree.sorted_edges())
        buffer.write(f"t {vertices} ; {edges}".rstrip() + "\n")
    return buffer.getvalue()


def read_solution(path: str) -> SolutionFile:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as error:
        raise InstanceError(f"Cannot read solution '{path}': {error}") from error
    return parse_solution(text)


def write_solution(path: str, kind: GraphMode, n: int, trees: Iterable[Tree]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(emit_solution(kind, n, trees))
