"""Solvers parameterized by the feedback arc set number of the tournament"""

from .algorithm import run_fixing_pass, verify_sba
from .guesses import augment_demands, iter_height_guesses, iter_parent_guesses, parent_candidates, sanity_check_guess
from .pack import pack
from .solvers import check_round_conflicts, solve_fpt, solve_with_rounds, solve_xp

__all__ = [
    "augment_demands",
    "check_round_conflicts",
    "iter_height_guesses",
    "iter_parent_guesses",
    "pack",
    "parent_candidates",
    "run_fixing_pass",
    "sanity_check_guess",
    "solve_fpt",
    "solve_with_rounds",
    "solve_xp",
    "verify_sba",
]
