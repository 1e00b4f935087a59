# -*- coding: utf-8 -*-

import json
from dataclasses import dataclass, field
from math import isfinite
from typing import Any, Dict, Final, Iterable, List, Optional, Sequence

import msgpack
import numpy as np

from fcover.errors import SolverError, UsageError
from fcover.graph.core import Graph
from fcover.graph.forest import Tree

SCHEMA: Final[str] = "fcover.report/1"
REPORT_FORMAT_JSON: Final[str] = "json"
REPORT_FORMAT_MSGPACK: Final[str] = "msgpack"
REPORT_FORMATS: Final[Sequence[str]] = (REPORT_FORMAT_JSON, REPORT_FORMAT_MSGPACK)


def describe_instance(graph: Graph, source: Optional[str] = None) -> Dict[str, Any]:
    return {
        "source": source,
        "kind": graph.mode.value,
        "n": graph.n,
        "m": graph.m,
    }


def describe_trees(trees: Iterable[Tree]) -> List[Dict[str, List[int]]]:
    """1-indexed vertex and edge ids, matching the file formats"""
    return [
        {
            "vertices": [v + 1 for v in tree.sorted_vertices()],
            "edges": [e + 1 for e in tree.sorted_edges()],
        }
        for tree in trees
    ]


def normalize(value: Any, path: str = "report") -> Any:
    """Plain JSON types; non-finite numbers are rejected"""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        if not isfinite(value):
            raise SolverError(f"Report field {path} is not finite: {value}")
        return float(value)
    if isinstance(value, dict):
        return {str(k): normalize(v, f"{path}.{k}") for k, v in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        items = sorted(value) if isinstance(value, (frozenset, set)) else value
        return [normalize(v, f"{path}[{i}]") for i, v in enumerate(items)]
    if value is None or isinstance(value, str):
        return value
    raise SolverError(f"Report field {path} has unsupported type {type(value)}")


@dataclass
class RunReport:
    command: str
    method: str
    instance: Dict[str, Any]
    value_name: str = "wi"
    value: Optional[float] = None
    lower_bound: Optional[float] = None
    ratio: Optional[float] = None
    seconds: float = 0.0
    seed: Optional[int] = None
    trees: List[Dict[str, List[int]]] = field(default_factory=list)
    diagnostics: Dict[str, Any] = field(default_factory=dict)
    rows: List[Dict[str, Any]] = field(default_factory=list)

    def to_document(self) -> Dict[str, Any]:
        document = {
            "schema": SCHEMA,
            "command": self.command,
            "method": self.method,
            "instance": self.instance,
            "value_name": self.value_name,
            "value": self.value,
            "lower_bound": self.lower_bound,
            "ratio": self.ratio,
            "seconds": self.seconds,
            "seed": self.seed,
            "trees": self.trees,
            "diagnostics": self.diagnostics,
            "rows": self.rows,
        }
        return normalize(document)

    def summary(self) -> str:
        parts = [f"{self.command}/{self.method}"]
        if self.value is not None:
            parts.append(f"{self.value_name}={self.value:.6f}")
        if self.lower_bound is not None:
            parts.append(f"lower_bound={self.lower_bound:.6f}")
        if self.ratio is not None:
            parts.append(f"ratio={self.ratio:.6f}")
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        parts.append(f"seconds={self.seconds:.3f}")
        return " ".join(parts)


def dumps_report(report: RunReport, report_format: str = REPORT_FORMAT_JSON) -> bytes:
    document = report.to_document()
    if report_format == REPORT_FORMAT_JSON:
        text = json.dumps(document, sort_keys=True, indent=2)
        return (text + "\n").encode("utf-8")
    if report_format == REPORT_FORMAT_MSGPACK:
        return msgpack.packb(document, use_bin_type=True)
    raise UsageError(f"Unknown report format: {report_format}")


def loads_report(
    data: bytes, report_format: str = REPORT_FORMAT_JSON
) -> Dict[str, Any]:
    if report_format == REPORT_FORMAT_JSON:
        return json.loads(data.decode("utf-8"))
    if report_format == REPORT_FORMAT_MSGPACK:
        return msgpack.unpackb(data, raw=False)
    raise UsageError(f"Unknown report format: {report_format}")
