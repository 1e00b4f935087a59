# -*- coding: utf-8 -*-

from fcover.bfc.decompose import edge_decompose
from fcover.bfc.pipeline import (
    METHOD_BFC,
    BfcSolution,
    bfc_6approx,
    check_bfc_solution,
    remove_unit_edges,
)
from fcover.bfc.transform import check_lambda, transform_weight, transform_weights

__all__ = [
    "BfcSolution",
    "METHOD_BFC",
    "bfc_6approx",
    "check_bfc_solution",
    "check_lambda",
    "edge_decompose",
    "remove_unit_edges",
    "transform_weight",
    "transform_weights",
]
