"""
Subset dynamic program over player sets of power-of-two size

Delta(S, x) holds when the players of S can be bracketed so that x wins and
every demand inside S is played. S splits into two equal halves won by x and by
its final opponent y, with no demand crossing the halves except (x, y). Sets
are bitmasks; the half holding the lowest player of S is enumerated first so
each split is seen once.
"""

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Set, Tuple

from ..arborescence.forest import RootedForest
from ..config import get_settings
from ..models.errors import InvalidWeights, TooLarge, WeightCapExceeded
from ..models.schemas import Seeding, TournamentDigraph, ValidatedInstance
from ..tournament import sba_to_seeding
from ..utils.helpers import _iter_bits

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


class Split(NamedTuple):
    """One reconstruction step: x wins `subset` by beating y in the final"""
    subset: int
    winner: int
    winner_half: int
    loser_half: int
    loser: int


class SubsetTable:
    """Delta(S, x) as winner bitmasks per subset, with back-pointers"""

    def __init__(self, n: int):
        self.n = n
        self.winners: Dict[int, int] = {1 << v: 1 << v for v in range(n)}
        self.back: Dict[Tuple[int, int], Tuple[int, int, int]] = {}

    def holds(self, subset: int, x: int) -> bool:
        return bool(self.winners.get(subset, 0) >> x & 1)

    def record(self, subset: int, x: int, own: int, other: int, y: int) -> None:
        """Keep the first witness only"""
        if (subset, x) not in self.back:
            self.back[(subset, x)] = (own, other, y)
            self.winners[subset] = self.winners.get(subset, 0) | 1 << x

    def reconstruct(self, subset: int, x: int) -> Tuple[RootedForest, List[Split]]:
        """Arborescence on `subset` rooted at x, plus the splits that produced it"""
        arcs: List[Arc] = []
        trace: List[Split] = []
        stack = [(subset, x)]
        while stack:
            s, w = stack.pop()
            if s & (s - 1) == 0:
                continue
            own, other, y = self.back[(s, w)]
            arcs.append((w, y))
            trace.append(Split(s, w, own, other, y))
            stack.append((own, w))
            stack.append((other, y))
        return RootedForest(_iter_bits(subset), arcs), trace


def _guard(n: int, max_n: Optional[int]) -> None:
    limit = get_settings().dp_max_n if max_n is None else max_n
    if n > limit:
        raise TooLarge(f"subset DP refuses n={n} (limit {limit})")


def _splits(n: int, size: int) -> Iterable[Tuple[int, int, int]]:
    """(S, S1, S2) for every S of `size` players and every equi-partition with min(S) in S1"""
    half = size // 2
    for members in combinations(range(n), size):
        subset = 0
        for p in members:
            subset |= 1 << p
        anchor = 1 << members[0]
        for partners in combinations(members[1:], half - 1):
            first = anchor
            for p in partners:
                first |= 1 << p
            yield subset, first, subset ^ first


def build_subset_table(
    t: TournamentDigraph,
    demands: Iterable[Arc] = (),
    rounds: Optional[Mapping[Arc, int]] = None,
) -> SubsetTable:
    """
    Fill Delta for every power-of-two subset, smallest first

    Args:
        t: Tournament with 2^r players
        demands: Demand arcs that must be played
        rounds: Optional pinned round per demand; a demand finalizing a set of
            size 2^i is admissible only when pinned to round i-1 (or unpinned)

    Returns:
        SubsetTable with back-pointers for reconstruction
    """
    rounds = rounds or {}
    wins = t.wins
    demand_list = sorted(demands)
    inside_cache: Dict[int, int] = {}

    def inside(mask: int) -> int:
        bits = inside_cache.get(mask)
        if bits is None:
            bits = 0
            for idx, (a, b) in enumerate(demand_list):
                if mask >> a & 1 and mask >> b & 1:
                    bits |= 1 << idx
            inside_cache[mask] = bits
        return bits

    table = SubsetTable(t.n)
    for level in range(1, t.log_n + 1):
        size = 1 << level
        for subset, first, second in _splits(t.n, size):
            w1 = table.winners.get(first, 0)
            if not w1:
                continue
            w2 = table.winners.get(second, 0)
            if not w2:
                continue
            crossing = inside(subset) & ~inside(first) & ~inside(second)
            if crossing == 0:
                for x in _iter_bits(w1):
                    beaten = wins[x] & w2
                    if beaten:
                        table.record(subset, x, first, second, (beaten & -beaten).bit_length() - 1)
                for x in _iter_bits(w2):
                    beaten = wins[x] & w1
                    if beaten:
                        table.record(subset, x, second, first, (beaten & -beaten).bit_length() - 1)
            elif crossing & (crossing - 1) == 0:
                a, b = demand_list[crossing.bit_length() - 1]
                pinned = rounds.get((a, b))
                if pinned is not None and pinned != level - 1:
                    continue
                if w1 >> a & 1 and w2 >> b & 1:
                    table.record(subset, a, first, second, b)
                elif w2 >> a & 1 and w1 >> b & 1:
                    table.record(subset, a, second, first, b)
        logger.debug(f"Subset DP: finished sets of size {size}")
    return table


def dp_solve(inst: ValidatedInstance, max_n: Optional[int] = None) -> Optional[Seeding]:
    """
    Decide the instance exactly and rebuild a seeding from back-pointers

    Raises:
        TooLarge: n above the DP guard
    """
    _guard(inst.n, max_n)
    if inst.trivially_no:
        logger.info("Subset DP: trivially no")
        return None
    table = build_subset_table(inst.tournament, inst.demands, inst.rounds)
    everyone = (1 << inst.n) - 1
    champions = table.winners.get(everyone, 0)
    if not champions:
        logger.info("Subset DP: no")
        return None
    champion = (champions & -champions).bit_length() - 1
    sba, _ = table.reconstruct(everyone, champion)
    seeding = sba_to_seeding(sba)
    logger.info(f"Subset DP: yes, champion {champion}, seeding {seeding}")
    return seeding


def dp_possible_winners(t: TournamentDigraph, max_n: Optional[int] = None) -> Set[int]:
    """Players who win some seeding (plain Tournament Fixing)"""
    _guard(t.n, max_n)
    table = build_subset_table(t)
    return set(_iter_bits(table.winners.get((1 << t.n) - 1, 0)))


def dp_tf_seeding(t: TournamentDigraph, target: int, max_n: Optional[int] = None) -> Optional[Seeding]:
    """A seeding that `target` wins, if any"""
    _guard(t.n, max_n)
    table = build_subset_table(t)
    everyone = (1 << t.n) - 1
    if not table.holds(everyone, target):
        return None
    sba, _ = table.reconstruct(everyone, target)
    return sba_to_seeding(sba)


def dp_max_weight(
    inst: ValidatedInstance,
    weights: Optional[Mapping[Arc, int]] = None,
    max_n: Optional[int] = None,
    weight_cap: Optional[int] = None,
) -> Tuple[int, Seeding]:
    """
    Seeding maximizing the total weight of played demands

    Delta(S, x, w) is kept as the best w per (S, x): the two halves are
    independent, so the best split combines the best of each half plus the
    weight of the final when it is a demand. A demand pinned to a round counts
    only when played in that round.

    Args:
        inst: Validated instance
        weights: Weight per demand (defaults to the instance's weights, else 1 each)
        max_n: Override of the DP size guard
        weight_cap: Override of the weight cap

    Returns:
        (best total weight, witnessing seeding)

    Raises:
        WeightCapExceeded: a weight above the cap
        InvalidWeights: weights not total on the demands, or negative
    """
    _guard(inst.n, max_n)
    cap = get_settings().weight_cap if weight_cap is None else weight_cap
    if weights is None:
        weights = inst.weights or {arc: 1 for arc in inst.demands}
    weights = dict(weights)
    if set(weights) != set(inst.demands):
        raise InvalidWeights("weights must cover exactly the demand set")
    for arc, w in weights.items():
        if w < 0:
            raise InvalidWeights(f"negative weight {w} for {arc}")
        if w > cap:
            raise WeightCapExceeded(f"weight {w} for {arc} exceeds cap {cap}")

    t = inst.tournament
    wins = t.wins
    best: Dict[int, Dict[int, int]] = {1 << v: {v: 0} for v in range(t.n)}
    table = SubsetTable(t.n)

    for level in range(1, t.log_n + 1):
        size = 1 << level
        for subset, first, second in _splits(t.n, size):
            b1 = best.get(first)
            if not b1:
                continue
            b2 = best.get(second)
            if not b2:
                continue
            current = best.setdefault(subset, {})
            for own, other, bo, bt in ((first, second, b1, b2), (second, first, b2, b1)):
                for x, wx in bo.items():
                    for y, wy in bt.items():
                        if not wins[x] >> y & 1:
                            continue
                        gain = weights.get((x, y), 0)
                        if gain and inst.rounds.get((x, y), level - 1) != level - 1:
                            gain = 0
                        total = wx + wy + gain
                        if total > current.get(x, -1):
                            current[x] = total
                            table.back[(subset, x)] = (own, other, y)

    everyone = (1 << t.n) - 1
    final = best[everyone]
    champion = max(final, key=lambda x: (final[x], -x))
    sba, _ = table.reconstruct(everyone, champion)
    seeding = sba_to_seeding(sba)
    logger.info(f"Weighted DP: best {final[champion]} with seeding {seeding}")
    return final[champion], seeding
