"""Shared builders for bracketfix tests"""

import random
from typing import Dict, Iterable, List, Optional, Tuple

import pytest

from bracketfix.config import get_settings
from bracketfix.models.schemas import DemandInstance, TournamentDigraph, ValidatedInstance
from bracketfix.tournament import validate_instance

Arc = Tuple[int, int]


def acyclic(n: int) -> TournamentDigraph:
    """Player i beats every player with a larger id"""
    return TournamentDigraph.from_order(list(range(n)))


def random_tournament(n: int, rng: random.Random) -> TournamentDigraph:
    wins = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                wins[u] |= 1 << v
            else:
                wins[v] |= 1 << u
    return TournamentDigraph(n=n, wins=tuple(wins))


def make_instance(
    t: TournamentDigraph,
    demands: Iterable[Arc] = (),
    rounds: Optional[Dict[Arc, int]] = None,
    weights: Optional[Dict[Arc, int]] = None,
) -> ValidatedInstance:
    return validate_instance(DemandInstance(tournament=t, demands=tuple(demands), rounds=rounds, weights=weights))


def binomial_arcs(h: int, offset: int = 0) -> List[Arc]:
    """Height-h binomial tree on offset..offset+2^h-1 rooted at offset"""
    if h == 0:
        return []
    half = 1 << (h - 1)
    lower = binomial_arcs(h - 1)
    arcs = lower + [(u + half, v + half) for u, v in lower] + [(0, half)]
    return [(u + offset, v + offset) for u, v in arcs]


def upset_instance() -> ValidatedInstance:
    """n=4, 0>1>2>3 except that 3 beats 0, with the upset demanded"""
    t = acyclic(4).with_reversed([(0, 3)])
    return make_instance(t, [(3, 0)])


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Every test starts from default guards"""
    for var in (
        "BRACKETFIX_ORACLE_MAX_N",
        "BRACKETFIX_DP_MAX_N",
        "BRACKETFIX_FIXER_MAX_N",
        "BRACKETFIX_FIXER_MAX_K",
        "BRACKETFIX_WEIGHT_CAP",
        "BRACKETFIX_GEN_MAX_K",
        "BRACKETFIX_LOG_LEVEL",
    ):
        monkeypatch.delenv(var, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
