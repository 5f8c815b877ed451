"""
Minimum feedback arc set of a tournament and the strength order it induces

A tournament is acyclic iff it has no directed triangle, and every feedback arc
set must reverse one arc of each triangle. Branching over the three arcs of the
first triangle, with iterative deepening on the budget, finds a minimum set.
"""

import logging
from typing import FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from .models.errors import NotAFeedbackArcSet, TooLarge
from .models.schemas import FeedbackStructure, TournamentDigraph

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]
Triangle = Tuple[int, int, int]


def _find_triangle(wins: Sequence[int]) -> Optional[Triangle]:
    """First (u, v, w) with u->v->w->u, scanning u then v by id"""
    n = len(wins)
    for u in range(n):
        beaten_by_u = wins[u]
        for v in range(n):
            if not beaten_by_u >> v & 1:
                continue
            # w must lose to v and beat u
            closing = wins[v] & ~beaten_by_u & ~(1 << u)
            for w in range(n):
                if closing >> w & 1 and wins[w] >> u & 1:
                    return (u, v, w)
    return None


def find_triangle(t: TournamentDigraph) -> Optional[Triangle]:
    return _find_triangle(t.wins)


def is_acyclic(t: TournamentDigraph) -> bool:
    return _find_triangle(t.wins) is None


def _branch(wins: List[int], flipped: FrozenSet[Arc], budget: int) -> Optional[FrozenSet[Arc]]:
    """
    Search for a reversal set of at most `budget` more arcs

    `flipped` holds original arcs already reversed in `wins`; those are never
    flipped back.
    """
    triangle = _find_triangle(wins)
    if triangle is None:
        return flipped
    if budget == 0:
        return None
    u, v, w = triangle
    for a, b in ((u, v), (v, w), (w, u)):
        if (b, a) in flipped:
            continue
        wins[a] &= ~(1 << b)
        wins[b] |= 1 << a
        found = _branch(wins, flipped | {(a, b)}, budget - 1)
        wins[b] &= ~(1 << a)
        wins[a] |= 1 << b
        if found is not None:
            return found
    return None


def strength_order(t: TournamentDigraph, feedback_arcs: Sequence[Arc]) -> Tuple[int, ...]:
    """
    Players strongest first, so that every arc outside F points forward

    Ties between players T - F leaves incomparable go to the smaller id.

    Raises:
        NotAFeedbackArcSet: T - F still has a cycle
    """
    removed = set(feedback_arcs)
    dag = nx.DiGraph()
    dag.add_nodes_from(range(t.n))
    dag.add_edges_from(arc for arc in t.arcs() if arc not in removed)
    try:
        order = list(nx.lexicographical_topological_sort(dag))
    except nx.NetworkXUnfeasible as e:
        raise NotAFeedbackArcSet(f"removing {sorted(removed)} leaves a cycle") from e
    return tuple(order)


def minimum_fas(t: TournamentDigraph, limit: Optional[int] = None) -> FeedbackStructure:
    """
    Minimum feedback arc set and a consistent strength order

    Args:
        t: Tournament digraph
        limit: Give up once no set of this many arcs suffices

    Returns:
        FeedbackStructure whose arcs are exactly the backward arcs of sigma

    Raises:
        TooLarge: the minimum exceeds `limit`
    """
    wins = list(t.wins)
    budget = 0
    while True:
        found = _branch(wins, frozenset(), budget)
        if found is not None:
            break
        budget += 1
        if limit is not None and budget > limit:
            raise TooLarge(f"feedback arc set number exceeds {limit}")
    sigma = strength_order(t, sorted(found))
    logger.debug(f"Minimum feedback arc set of size {len(found)}: {sorted(found)}")
    return FeedbackStructure(arcs=found, sigma=sigma)
