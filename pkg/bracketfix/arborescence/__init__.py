"""
Rooted-forest machinery: binomial and partial binomial arborescences, heights,
guessed sizes and the alpha-star estimate
"""

from .forest import RootedForest, WorkForest
from .heights import (
    alpha,
    alpha_star,
    feedback_descendants,
    guessed_size_beta,
    guessed_sizes,
    is_binomial_arborescence,
    is_compact,
    is_partial_ba,
    is_weakly_compact,
)

__all__ = [
    "RootedForest",
    "WorkForest",
    "alpha",
    "alpha_star",
    "feedback_descendants",
    "guessed_size_beta",
    "guessed_sizes",
    "is_binomial_arborescence",
    "is_compact",
    "is_partial_ba",
    "is_weakly_compact",
]
