"""
Tournament Fixing as a demand instance

For a target v* among n players, add n dummy players n..2n-1 forming an
acyclic tournament led by d1 = n. d1 beats v* and loses to every other real
player; every real player beats the remaining dummies. Demanding (d1, v*) plus
d1's matches in the dummies' own bracket forces the real players into one half
with v* winning it.
"""

import logging
from typing import Callable, Optional

from ..models.errors import NotPowerOfTwo
from ..models.schemas import DemandInstance, Seeding, TfInstance, TournamentDigraph, ValidatedInstance
from ..tournament import validate_instance

logger = logging.getLogger(__name__)

Solver = Callable[[ValidatedInstance], Optional[Seeding]]


def reduce_tf(tf: TfInstance) -> DemandInstance:
    """
    Build the 2n-player demand instance that is yes iff the target can win

    Returns:
        DemandInstance with log n + 1 demands

    Raises:
        NotPowerOfTwo: the TF tournament does not have 2^r players
    """
    t = tf.tournament
    n = t.n
    if not t.is_power_of_two:
        raise NotPowerOfTwo(f"{n} players is not a power of two")
    d1 = n
    wins = list(t.wins) + [0] * n
    for a in range(n, 2 * n):
        for b in range(a + 1, 2 * n):
            wins[a] |= 1 << b
    for v in range(n):
        if v == tf.target:
            wins[d1] |= 1 << v
        else:
            wins[v] |= 1 << d1
        for dummy in range(n + 1, 2 * n):
            wins[v] |= 1 << dummy

    # d1's matches when the dummies are seeded n, n+1, ..., 2n-1
    demands = [(d1, tf.target)] + [(d1, d1 + (1 << i)) for i in range(t.log_n)]
    reduced = DemandInstance(tournament=TournamentDigraph(n=2 * n, wins=tuple(wins)), demands=tuple(sorted(demands)))
    logger.debug(f"Reduced TF instance on {n} players with target {tf.target} to {2 * n} players")
    return reduced


def lift_seeding(tf: TfInstance, seeding: Seeding) -> Seeding:
    """The half of a reduced instance's seeding that holds the real players"""
    n = tf.tournament.n
    half = seeding.order[:n] if tf.target in seeding.order[:n] else seeding.order[n:]
    return Seeding(order=half)


def solve_tf(tf: TfInstance, solver: Solver) -> Optional[Seeding]:
    """
    Decide a TF instance through the reduction

    Args:
        tf: Tournament and target
        solver: Any demand solver (oracle, subset DP, fixer)

    Returns:
        A seeding of the original players that the target wins, or None
    """
    reduced = validate_instance(reduce_tf(tf))
    seeding = solver(reduced)
    if seeding is None:
        return None
    return lift_seeding(tf, seeding)
