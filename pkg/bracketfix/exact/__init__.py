"""Exact solvers: brute-force oracle and the subset dynamic program"""

from .oracle import brute_force_tf_winners, iter_brackets, oracle_max_weight, oracle_solve
from .subset_dp import (
    SubsetTable,
    Split,
    build_subset_table,
    dp_max_weight,
    dp_possible_winners,
    dp_solve,
    dp_tf_seeding,
)

__all__ = [
    "SubsetTable",
    "Split",
    "brute_force_tf_winners",
    "build_subset_table",
    "dp_max_weight",
    "dp_possible_winners",
    "dp_solve",
    "dp_tf_seeding",
    "iter_brackets",
    "oracle_max_weight",
    "oracle_solve",
]
