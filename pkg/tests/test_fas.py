"""Tests for the minimum feedback arc set and strength order"""

import random
from itertools import permutations

import pytest

from bracketfix.fas import find_triangle, is_acyclic, minimum_fas, strength_order
from bracketfix.models.errors import NotAFeedbackArcSet, TooLarge
from bracketfix.models.schemas import TournamentDigraph

from conftest import acyclic, random_tournament


def fas_by_orderings(t: TournamentDigraph) -> int:
    """Fewest backward arcs over every ordering of the players"""
    best = None
    for order in permutations(range(t.n)):
        pos = {v: i for i, v in enumerate(order)}
        backward = sum(1 for u, v in t.arcs() if pos[u] > pos[v])
        if best is None or backward < best:
            best = backward
    return best


def test_acyclic_tournament():
    fs = minimum_fas(acyclic(5))
    assert fs.k == 0
    assert fs.sigma == (0, 1, 2, 3, 4)


def test_single_upset():
    t = acyclic(4).with_reversed([(0, 3)])
    fs = minimum_fas(t)
    assert fs.arcs == {(3, 0)}
    assert fs.sigma == (0, 1, 2, 3)
    assert fs.feedback_vertices == {0, 3}
    assert fs.heads == {0}


def test_two_disjoint_triangles_need_two_arcs():
    arcs = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    arcs += [(u, v) for u in range(3) for v in range(3, 6)]
    assert minimum_fas(TournamentDigraph.from_arcs(6, arcs)).k >= 2


def test_triangle_detection():
    t = TournamentDigraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert find_triangle(t) == (0, 1, 2)
    assert not is_acyclic(t)
    assert is_acyclic(acyclic(6))


def test_strength_order_rejects_non_fas():
    t = TournamentDigraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(NotAFeedbackArcSet):
        strength_order(t, [])


def test_strength_order_with_every_arc_removed():
    t = random_tournament(5, random.Random(0))
    assert strength_order(t, t.arcs()) == (0, 1, 2, 3, 4)


def test_limit_raises_too_large():
    t = TournamentDigraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(TooLarge):
        minimum_fas(t, limit=0)


@pytest.mark.parametrize("seed", range(12))
def test_minimum_and_consistent(seed):
    n = 4 + seed % 3
    t = random_tournament(n, random.Random(seed))
    fs = minimum_fas(t)
    assert fs.k == fas_by_orderings(t)
    assert (fs.k == 0) == is_acyclic(t)
    rank = fs.rank
    backward = {(u, v) for u, v in t.arcs() if rank[u] > rank[v]}
    assert backward == set(fs.arcs)
