"""
Seeded instance generators

Tournaments start acyclic on a random strength order and get k arcs reversed,
so the minimum feedback arc set is at most k. Yes-mode demands are matches of a
bracket that was actually played; uniform-mode demands are arbitrary arcs with
distinct losers; upsets-mode demands hold every arc of a minimum feedback arc set,
topped up with arbitrary arcs on unused losers.
"""

import logging
import random
from typing import Dict, List, Optional, Tuple

from ..config import get_settings
from ..fas import minimum_fas
from ..models.errors import BracketFixError, InfeasibleDemandCount, NotPowerOfTwo, TooLarge
from ..models.schemas import DemandInstance, Seeding, TournamentDigraph
from ..tournament import simulate
from ..utils.helpers import _is_power_of_two

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]

MODES = ("yes", "uniform", "upsets")


def gen_tournament(n: int, k_target: int, rng: random.Random) -> TournamentDigraph:
    """Acyclic tournament on a shuffled order with k_target arcs flipped"""
    order = list(range(n))
    rng.shuffle(order)
    t = TournamentDigraph.from_order(order)
    arcs = t.arcs()
    flips = rng.sample(arcs, min(k_target, len(arcs)))
    return t.with_reversed(flips)


def gen_instance(
    n: int,
    k_target: int,
    d: int,
    mode: str = "yes",
    seed: int = 0,
    with_rounds: bool = False,
    max_weight: Optional[int] = None,
) -> DemandInstance:
    """
    Generate a demand instance

    Args:
        n: Number of players, a power of two
        k_target: Number of arcs to reverse after building the acyclic tournament
        d: Number of demands
        mode: "yes" samples demands from a played bracket, "uniform" samples any
            arcs with distinct losers, "upsets" demands every upset of a minimum
            feedback arc set plus arbitrary arcs up to d
        seed: Random seed; equal arguments give equal instances
        with_rounds: Pin each demand to a round (its realized round in yes mode,
            a random round otherwise)
        max_weight: Attach weights drawn from [1, max_weight]

    Returns:
        DemandInstance

    Raises:
        NotPowerOfTwo: n is not 2^r
        TooLarge: k_target above the generator cap
        InfeasibleDemandCount: d above n - 1, or below the feedback arc set
            size in upsets mode
    """
    if not _is_power_of_two(n):
        raise NotPowerOfTwo(f"{n} players is not a power of two")
    limit = get_settings().gen_max_k
    if k_target > limit:
        raise TooLarge(f"k_target={k_target} exceeds the generator cap {limit}")
    if mode not in MODES:
        raise BracketFixError(f"unknown mode {mode!r}; expected one of {MODES}")
    if d < 0 or d > n - 1:
        raise InfeasibleDemandCount(f"{d} demands requested, at most {n - 1} fit a bracket of {n}")

    rng = random.Random(seed)
    t = gen_tournament(n, k_target, rng)
    log_n = n.bit_length() - 1
    rounds: Dict[Arc, int] = {}

    if mode == "yes":
        order = list(range(n))
        rng.shuffle(order)
        _, matches = simulate(t, Seeding(order=tuple(order)))
        chosen = rng.sample(matches, d)
        demands: List[Arc] = sorted(m.arc for m in chosen)
        if with_rounds:
            rounds = {m.arc: m.round for m in chosen}
    else:
        demands = []
        if mode == "upsets":
            demands = sorted(minimum_fas(t).arcs)
            if len(demands) > d:
                raise InfeasibleDemandCount(f"{d} demands requested, the {len(demands)} upsets need more")
        heads = {v for _, v in demands}
        candidates = [arc for arc in t.arcs() if arc not in demands]
        rng.shuffle(candidates)
        for u, v in candidates:
            if len(demands) == d:
                break
            if v in heads:
                continue
            demands.append((u, v))
            heads.add(v)
        demands.sort()
        if with_rounds:
            rounds = {arc: rng.randrange(log_n) for arc in demands}

    weights = None
    if max_weight is not None:
        weights = {arc: rng.randint(1, max_weight) for arc in demands}

    logger.debug(f"Generated {mode} instance n={n} k_target={k_target} d={d} seed={seed}")
    return DemandInstance(tournament=t, demands=tuple(demands), rounds=rounds or None, weights=weights)
