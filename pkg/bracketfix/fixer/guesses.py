"""
Guess enumeration for the feedback-arc-set solver

A guess is a parent for every feedback vertex (None meaning it is the champion)
and a height for every feedback vertex. Both are enumerated in lexicographic
order so the first accepted guess is reproducible.
"""

import logging
from itertools import product
from typing import AbstractSet, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

from ..models.schemas import ValidatedInstance
from ..utils.helpers import _iter_bits

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]
ParentGuess = Dict[int, Optional[int]]


def parent_candidates(inst: ValidatedInstance, v: int) -> List[Optional[int]]:
    """Possible parents of a feedback vertex: its demand parent if it has one, else every in-neighbour then None"""
    if v in inst.lose:
        return [inst.demand_parent[v]]
    return list(_iter_bits(inst.tournament.losses[v])) + [None]


def iter_parent_guesses(inst: ValidatedInstance, feedback_vertices: AbstractSet[int]) -> Iterator[ParentGuess]:
    """
    Parent guesses in lexicographic order, at most one vertex guessed parentless

    Args:
        inst: Validated instance
        feedback_vertices: Vertices needing a parent guess

    Yields:
        Map from feedback vertex to its guessed parent (None for the champion)
    """
    order = sorted(feedback_vertices)
    options = [parent_candidates(inst, v) for v in order]
    for choice in product(*options):
        if sum(1 for p in choice if p is None) > 1:
            continue
        yield dict(zip(order, choice))


def augment_demands(inst: ValidatedInstance, parents: Mapping[int, Optional[int]]) -> FrozenSet[Arc]:
    """S plus (p(v), v) for every guessed parent of a vertex that loses no demand"""
    extra = {(p, v) for v, p in parents.items() if p is not None and v not in inst.lose}
    return inst.demands | frozenset(extra)


def iter_height_guesses(
    vertices: Iterable[int],
    log_n: int,
    demands: Iterable[Arc],
    pinned: Optional[Mapping[int, int]] = None,
    bottom: Optional[int] = None,
) -> Iterator[Dict[int, int]]:
    """
    Height guesses g for `vertices`, lexicographically ascending by vertex id

    A partial guess is abandoned as soon as a demand arc or a pair of demand
    siblings with both ends assigned breaks the height order, or a second vertex
    reaches log n. Pinned heights are assigned up front; a pinned vertex of
    `vertices` is not guessed.

    Args:
        vertices: Domain of the guess
        log_n: Tournament height
        demands: Demand arcs (augmented)
        pinned: Heights fixed by round constraints
        bottom: Vertex guessed parentless; its height is log n

    Yields:
        Map from each vertex in `vertices` to its guessed height
    """
    order = sorted(vertices)
    pinned = dict(pinned or {})
    parent: Dict[int, int] = {}
    children: Dict[int, List[int]] = {}
    for u, v in demands:
        parent[v] = u
        children.setdefault(u, []).append(v)

    def consistent(v: int, value: int, assigned: Dict[int, int]) -> bool:
        u = parent.get(v)
        if u is not None:
            if u in assigned and assigned[u] <= value:
                return False
            for w in children[u]:
                if w != v and assigned.get(w) == value:
                    return False
        for c in children.get(v, ()):
            if c in assigned and assigned[c] >= value:
                return False
        if value == log_n and any(h == log_n for x, h in assigned.items() if x != v):
            return False
        return True

    assigned = {v: h for v, h in pinned.items() if v not in order}

    def choices(v: int) -> List[int]:
        if v in pinned:
            allowed = [pinned[v]]
        else:
            allowed = list(range(log_n + 1))
        if v == bottom:
            allowed = [h for h in allowed if h == log_n]
        return allowed

    def dfs(idx: int) -> Iterator[Dict[int, int]]:
        if idx == len(order):
            yield {v: assigned[v] for v in order}
            return
        v = order[idx]
        for value in choices(v):
            if consistent(v, value, assigned):
                assigned[v] = value
                yield from dfs(idx + 1)
                del assigned[v]

    yield from dfs(0)


def sanity_check_guess(
    s_aug: Iterable[Arc],
    feedback_vertices: AbstractSet[int],
    g: Mapping[int, int],
    alpha_star_map: Mapping[int, int],
    n: int,
    bottom: Optional[int] = None,
) -> bool:
    """
    Cheap rejection of a guess before running a fixing pass

    Args:
        s_aug: Augmented demand arcs
        feedback_vertices: Domain of the height guess
        g: Guessed heights
        alpha_star_map: alpha-star computed for (s_aug, g)
        n: Number of players
        bottom: Vertex guessed parentless, if any

    Returns:
        True iff demand parents sit above their children, demand siblings differ,
        the parentless guess has height log n, no height exceeds log n and at most
        one vertex reaches it
    """
    log_n = n.bit_length() - 1
    siblings: Dict[int, List[int]] = {}
    for u, v in s_aug:
        if alpha_star_map[u] <= alpha_star_map[v]:
            return False
        siblings.setdefault(u, []).append(v)
    for kids in siblings.values():
        heights = [alpha_star_map[v] for v in kids]
        if len(set(heights)) != len(heights):
            return False
    if bottom is not None and g.get(bottom) != log_n:
        return False
    for v in feedback_vertices:
        if not 0 <= g[v] <= log_n:
            return False
    tops = 0
    for value in alpha_star_map.values():
        if value > log_n:
            return False
        if value == log_n:
            tops += 1
    return tops <= 1
