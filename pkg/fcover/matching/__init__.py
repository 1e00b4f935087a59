# -*- coding: utf-8 -*-

from fcover.matching.blossom import (
    Matching,
    find_augmenting_path,
    is_matching,
    maximum_matching,
)
from fcover.matching.brute import MAX_BRUTE_FORCE_EDGES, brute_force_matching

__all__ = [
    "MAX_BRUTE_FORCE_EDGES",
    "Matching",
    "brute_force_matching",
    "find_augmenting_path",
    "is_matching",
    "maximum_matching",
]
