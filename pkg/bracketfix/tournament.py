"""
Single-elimination simulation and instance validation

Bracket convention: seeding position i meets position i XOR 1 in round 0, and
the winner of positions (2i, 2i+1) takes position i in the next round.
"""

import logging
from typing import Dict, List, Set, Tuple

from .arborescence.forest import RootedForest
from .arborescence.heights import ba_height
from .models.errors import BadRound, DemandNotAnArc, DuplicateDemand, InvalidWeights, NotAnSBA, NotPowerOfTwo
from .models.schemas import DemandInstance, MatchRecord, Seeding, SolutionReport, TournamentDigraph, ValidatedInstance

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


def validate_instance(inst: DemandInstance) -> ValidatedInstance:
    """
    Check an instance and flag the immediate no-rule

    Args:
        inst: Raw demand instance

    Returns:
        ValidatedInstance; trivially_no is set when some player has demand in-degree > 1

    Raises:
        NotPowerOfTwo, DemandNotAnArc, DuplicateDemand, BadRound, InvalidWeights
    """
    t = inst.tournament
    if not t.is_power_of_two:
        raise NotPowerOfTwo(f"{t.n} players is not a power of two")

    seen: Set[Arc] = set()
    for u, v in inst.demands:
        if (u, v) in seen:
            raise DuplicateDemand(f"demand ({u}, {v}) listed twice")
        seen.add((u, v))
        if not t.beats(u, v):
            raise DemandNotAnArc(f"demand ({u}, {v}) but {v} beats {u}")

    rounds = dict(inst.rounds or {})
    for arc, r in rounds.items():
        if arc not in seen:
            raise BadRound(f"round given for {arc}, which is not a demand")
        if not 0 <= r < t.log_n:
            raise BadRound(f"round {r} for {arc} outside [0, {t.log_n - 1}]")

    weights = dict(inst.weights or {})
    for arc, w in weights.items():
        if arc not in seen:
            raise InvalidWeights(f"weight given for {arc}, which is not a demand")
        if w < 0:
            raise InvalidWeights(f"negative weight {w} for {arc}")
    if weights and set(weights) != seen:
        raise InvalidWeights(f"weights missing for {sorted(seen - set(weights))}")

    in_degree: Dict[int, int] = {}
    for _, v in seen:
        in_degree[v] = in_degree.get(v, 0) + 1
    trivially_no = any(d > 1 for d in in_degree.values())
    if trivially_no:
        logger.info("Some player has demand in-degree above 1; instance is trivially no")

    return ValidatedInstance(
        tournament=t,
        demands=frozenset(seen),
        rounds=rounds,
        weights=weights,
        trivially_no=trivially_no,
    )


def simulate(t: TournamentDigraph, s: Seeding) -> Tuple[RootedForest, List[MatchRecord]]:
    """
    Play out a seeding

    Returns:
        The spanning binomial arborescence (winner -> loser arcs) and the matches,
        round by round
    """
    if not t.is_power_of_two:
        raise NotPowerOfTwo(f"{t.n} players is not a power of two")
    if s.n != t.n:
        raise ValueError(f"seeding has {s.n} players, tournament has {t.n}")
    alive = list(s.order)
    matches: List[MatchRecord] = []
    rnd = 0
    while len(alive) > 1:
        advancing = []
        for i in range(0, len(alive), 2):
            a, b = alive[i], alive[i + 1]
            winner, loser = (a, b) if t.beats(a, b) else (b, a)
            matches.append(MatchRecord(winner=winner, loser=loser, round=rnd))
            advancing.append(winner)
        alive = advancing
        rnd += 1
    sba = RootedForest(range(t.n), [m.arc for m in matches])
    return sba, matches


def sba_to_seeding(sba: RootedForest) -> Seeding:
    """
    Unfold a spanning binomial arborescence into a bracket that replays it

    A root of height h plays its height-(h-1) child in round h-1, so its bracket
    is its own bracket at height h-1 followed by that child's.

    Raises:
        NotAnSBA: more than one root, or the tree is not binomial
    """
    roots = sba.roots()
    if len(roots) != 1:
        raise NotAnSBA(f"expected one root, found {len(roots)}")
    root = roots[0]
    height = ba_height(sba, root)
    if height is None:
        raise NotAnSBA("tree is not a binomial arborescence")

    by_height: Dict[int, Dict[int, int]] = {}

    def heights_below(v: int) -> Dict[int, int]:
        if v not in by_height:
            by_height[v] = {ba_height(sba, c): c for c in sba.children(v)}
        return by_height[v]

    def unfold(v: int, h: int) -> List[int]:
        if h == 0:
            return [v]
        child = heights_below(v)[h - 1]
        return unfold(v, h - 1) + unfold(child, h - 1)

    return Seeding(order=tuple(unfold(root, height)))


def check_solution(inst: ValidatedInstance, s: Seeding) -> SolutionReport:
    """Which demands a seeding plays, and whether pinned rounds are honoured"""
    _, matches = simulate(inst.tournament, s)
    played = {m.arc: m.round for m in matches}
    missed = frozenset(arc for arc in inst.demands if arc not in played)
    violations = frozenset(
        arc for arc, r in inst.rounds.items() if arc in played and played[arc] != r
    )
    return SolutionReport(ok=not missed and not violations, missed=missed, round_violations=violations)
