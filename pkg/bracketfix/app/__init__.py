"""Instance files, generators, the Tournament Fixing reduction, rendering and the outer surfaces"""

from .generators import gen_instance, gen_tournament
from .instance_io import parse_instance, serialize_instance
from .pipeline import ALGORITHMS, SolveOutcome, dispatch, run_solver
from .reduction import lift_seeding, reduce_tf, solve_tf
from .render import render_bracket

__all__ = [
    "ALGORITHMS",
    "SolveOutcome",
    "dispatch",
    "gen_instance",
    "gen_tournament",
    "lift_seeding",
    "parse_instance",
    "reduce_tf",
    "render_bracket",
    "run_solver",
    "serialize_instance",
    "solve_tf",
]
