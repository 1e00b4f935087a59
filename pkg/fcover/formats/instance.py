# -*- coding: utf-8 -*-

from dataclasses import dataclass
from io import StringIO
from typing import Final, Iterable, List, Optional, Tuple

from fcover.errors import InstanceError
from fcover.graph.core import EdgeTuple, Graph, GraphMode

COMMENT: Final[str] = "c"
HEADER: Final[str] = "p"
EDGE: Final[str] = "e"


@dataclass(frozen=True)
class InstanceFile:
    graph: Graph
    comments: Tuple[str, ...] = ()


def format_weight(w: float) -> str:
    """Shortest text that reads back as the same float"""
    return repr(float(w))


def _parse_int(token: str, what: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceError(f"Line {line_no}: {what} is not an integer: {token!r}")


def parse_instance_file(text: str) -> InstanceFile:
    """Parse ``c``/``p fc|bfc n m``/``e u v w`` lines with 1-indexed vertices"""
    comments: List[str] = []
    header: Optional[Tuple[GraphMode, int, int]] = None
    edges: List[EdgeTuple] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        tag = tokens[0]

        if tag == COMMENT:
            comments.append(line[1:].strip())
        elif tag == HEADER:
            if header is not None:
                raise InstanceError(f"Line {line_no}: second problem line")
            if len(tokens) != 4:
                raise InstanceError(f"Line {line_no}: expected 'p <kind> <n> <m>'")
            try:
                mode = GraphMode(tokens[1])
            except ValueError:
                raise InstanceError(f"Line {line_no}: unknown kind {tokens[1]!r}")
            n = _parse_int(tokens[2], "vertex count", line_no)
            m = _parse_int(tokens[3], "edge count", line_no)
            if n < 0 or m < 0:
                raise InstanceError(f"Line {line_no}: negative size")
            header = (mode, n, m)
        elif tag == EDGE:
            if header is None:
                raise InstanceError(f"Line {line_no}: edge before the problem line")
            if len(tokens) != 4:
                raise InstanceError(f"Line {line_no}: expected 'e <u> <v> <w>'")
            u = _parse_int(tokens[1], "vertex", line_no)
            v = _parse_int(tokens[2], "vertex", line_no)
            try:
                w = float(tokens[3])
            except ValueError:
                raise InstanceError(f"Line {line_no}: bad weight {tokens[3]!r}")
            n = header[1]
            if not (1 <= u <= n and 1 <= v <= n):
                raise InstanceError(f"Line {line_no}: vertex out of range 1..{n}")
            edges.append((u - 1, v - 1, w))
        else:
            raise InstanceError(f"Line {line_no}: unknown record {tag!r}")

    if header is None:
        raise InstanceError("Missing problem line 'p <kind> <n> <m>'")
    mode, n, m = header
    if len(edges) != m:
        raise InstanceError(f"Header declares {m} edges, found {len(edges)}")

    try:
        graph = Graph(n, edges, mode)
    except InstanceError as error:
        raise InstanceError(f"Invalid instance: {error}") from error
    return InstanceFile(graph, tuple(comments))


def parse_instance(text: str) -> Graph:
    return parse_instance_file(text).graph


def emit_instance(graph: Graph, comments: Iterable[str] = ()) -> str:
    buffer = StringIO()
    for comment in comments:
        buffer.write(f"c {comment}".rstrip() + "\n")
    buffer.write(f"p {graph.mode.value} {graph.n} {graph.m}\n")
    for edge in graph.edges:
        buffer.write(f"e {edge.u + 1} {edge.v + 1} {format_weight(edge.w)}\n")
    return buffer.getvalue()


def read_instance(path: str) -> InstanceFile:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as error:
        raise InstanceError(f"Cannot read instance '{path}': {error}") from error
    return parse_instance_file(text)


def write_instance(path: str, graph: Graph, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(emit_instance(graph, comments))
