"""
Brute-force ground truth

Swapping the two halves of any sub-bracket changes no match, so enumerating one
bracket per such class (the half holding the lowest id goes first) covers the
outcome of every permutation.
"""

import logging
from itertools import combinations
from typing import Iterator, Optional, Sequence, Set, Tuple

from ..config import get_settings
from ..models.errors import TooLarge
from ..models.schemas import Seeding, TournamentDigraph, ValidatedInstance
from ..tournament import check_solution, simulate

logger = logging.getLogger(__name__)


def iter_brackets(players: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Every distinct bracket over `players` (size a power of two)"""
    if len(players) == 1:
        yield (players[0],)
        return
    first, rest = players[0], list(players[1:])
    half = len(players) // 2
    for partners in combinations(rest, half - 1):
        left = (first,) + partners
        chosen = set(partners)
        right = tuple(p for p in rest if p not in chosen)
        for left_bracket in iter_brackets(left):
            for right_bracket in iter_brackets(right):
                yield left_bracket + right_bracket


def _guard(n: int, max_n: Optional[int]) -> None:
    limit = get_settings().oracle_max_n if max_n is None else max_n
    if n > limit:
        raise TooLarge(f"oracle refuses n={n} (limit {limit})")


def oracle_solve(inst: ValidatedInstance, max_n: Optional[int] = None) -> Optional[Seeding]:
    """
    First seeding, in bracket enumeration order, that plays every demand

    Honours pinned rounds and the trivially-no flag.

    Raises:
        TooLarge: n above the oracle guard
    """
    _guard(inst.n, max_n)
    if inst.trivially_no:
        logger.info("Oracle: trivially no")
        return None
    for order in iter_brackets(list(range(inst.n))):
        seeding = Seeding(order=order)
        if check_solution(inst, seeding).ok:
            logger.info(f"Oracle: yes with seeding {seeding}")
            return seeding
    logger.info("Oracle: no seeding plays every demand")
    return None


def oracle_max_weight(inst: ValidatedInstance, max_n: Optional[int] = None) -> Tuple[int, Seeding]:
    """Best total weight of played demands over all brackets (unit weights if none given)"""
    _guard(inst.n, max_n)
    weights = inst.weights or {arc: 1 for arc in inst.demands}
    best, best_seeding = -1, None
    for order in iter_brackets(list(range(inst.n))):
        seeding = Seeding(order=order)
        _, matches = simulate(inst.tournament, seeding)
        total = 0
        for m in matches:
            if m.arc in weights and inst.rounds.get(m.arc, m.round) == m.round:
                total += weights[m.arc]
        if total > best:
            best, best_seeding = total, seeding
    return best, best_seeding


def brute_force_tf_winners(t: TournamentDigraph, max_n: Optional[int] = None) -> Set[int]:
    """Players who win under at least one bracket"""
    _guard(t.n, max_n)
    winners = set()
    for order in iter_brackets(list(range(t.n))):
        sba, _ = simulate(t, Seeding(order=order))
        winners.add(sba.roots()[0])
    return winners
