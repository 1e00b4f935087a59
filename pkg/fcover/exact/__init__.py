# -*- coding: utf-8 -*-

from fcover.exact.bfc import exact_bfc
from fcover.exact.budget import (
    BFC_BUDGET,
    FC_BUDGET,
    SEPARATION_BUDGET,
    VERTEX_COVER_BUDGET,
    ExactBudget,
)
from fcover.exact.fc import exact_fc, minimum_vertex_cover_size
from fcover.exact.separation import brute_force_separation

__all__ = [
    "BFC_BUDGET",
    "ExactBudget",
    "FC_BUDGET",
    "SEPARATION_BUDGET",
    "VERTEX_COVER_BUDGET",
    "brute_force_separation",
    "exact_bfc",
    "exact_fc",
    "minimum_vertex_cover_size",
]
