"""
Heights, guessed sizes and arborescence shape checks

alpha is the true height log|Desc(v)|; guessed_sizes is beta, which takes the
size of a feedback vertex from its guessed height; alpha_star is the lowest
height a vertex can have given its demand children, its demand siblings and
the fixed heights.
"""

import logging
from typing import AbstractSet, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..models.errors import NotPowerOfTwoSubtree, PreconditionViolated
from ..models.schemas import ValidatedInstance
from ..utils.helpers import _exact_log2
from .forest import RootedForest

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


def alpha(forest: RootedForest, v: int) -> int:
    """
    Height of v: log2 of its descendant count

    Raises:
        NotPowerOfTwoSubtree: |Desc(v)| is not a power of two
    """
    size = len(forest.descendants(v))
    height = _exact_log2(size)
    if height is None:
        raise NotPowerOfTwoSubtree(f"vertex {v} has {size} descendants")
    return height


def _ba_height(forest: RootedForest, v: int) -> Optional[int]:
    # A height-h BA root has exactly h children, rooting BAs of heights 0..h-1.
    heights = []
    for c in forest.children(v):
        h = _ba_height(forest, c)
        if h is None:
            return None
        heights.append(h)
    if sorted(heights) != list(range(len(heights))):
        return None
    return len(heights)


def ba_height(forest: RootedForest, root: int) -> Optional[int]:
    """Height of the binomial arborescence at root, or None if it is not one"""
    return _ba_height(forest, root)


def is_binomial_arborescence(forest: RootedForest, root: int) -> bool:
    return _ba_height(forest, root) is not None


def feedback_descendants(forest: RootedForest, v: int, feedback_vertices: AbstractSet[int]) -> set:
    """Vertices whose path from v passes through a feedback vertex other than v and themselves"""
    result = set()
    for f in forest.descendants(v):
        if f != v and f in feedback_vertices:
            result |= forest.descendants(f) - {f}
    return result


def guessed_sizes(forest: RootedForest, g: Mapping[int, int], roots: Optional[Iterable[int]] = None) -> Dict[int, int]:
    """Guessed size of every vertex in one bottom-up pass"""
    beta: Dict[int, int] = {}
    for root in (forest.roots() if roots is None else roots):
        for node in forest.postorder(root):
            if node in g:
                beta[node] = 1 << g[node]
            else:
                beta[node] = 1 + sum(beta[c] for c in forest.children(node))
    return beta


def guessed_size_beta(forest: RootedForest, v: int, g: Mapping[int, int]) -> int:
    if v in g:
        return 1 << g[v]
    return guessed_sizes(forest, g, roots=[v])[v]


def is_partial_ba(
    forest: RootedForest,
    root: int,
    feedback_vertices: AbstractSet[int],
    g: Mapping[int, int],
    claimed_height: int,
) -> bool:
    """
    Whether the subtree at root is a height-`claimed_height` BA minus some feedback
    descendants of the root

    Vertices reached from the root without passing a feedback vertex must carry
    their full set of child heights. Below a feedback vertex anything may be
    missing, so there the check only asks that the kept children fit into
    distinct heights under their parent.

    Args:
        forest: Forest holding the subtree
        root: Root of the subtree
        feedback_vertices: V(F)
        g: Guessed height of every feedback vertex in the subtree
        claimed_height: Height the subtree should have

    Returns:
        True iff the subtree is a PBA of the claimed height
    """
    fixed = {v: g[v] for v in feedback_vertices if v in g}
    missing = [v for v in forest.descendants(root) if v in feedback_vertices and v not in fixed]
    if missing:
        raise PreconditionViolated(f"no guessed height for feedback vertices {sorted(missing)}")
    beta = guessed_sizes(forest, fixed, roots=[root])

    if root in fixed:
        if fixed[root] != claimed_height:
            return False
    elif beta[root] != 1 << claimed_height:
        return False

    def min_height(x: int) -> Optional[int]:
        # Smallest height x can take when any of its descendants may be missing.
        taken: List[int] = []
        free: List[int] = []
        for c in forest.children(x):
            if c in fixed:
                if not fits_fixed(c):
                    return None
                taken.append(fixed[c])
            else:
                m = min_height(c)
                if m is None:
                    return None
                free.append(m)
        if len(set(taken)) != len(taken):
            return None
        used = set(taken)
        top = max(taken, default=-1)
        for m in sorted(free):
            slot = m
            while slot in used:
                slot += 1
            used.add(slot)
            top = max(top, slot)
        return top + 1

    def fits_fixed(f: int) -> bool:
        m = min_height(f)
        return m is not None and m <= fixed[f]

    def complete_at(x: int, h: int) -> bool:
        kids = forest.children(x)
        heights = []
        for c in kids:
            hc = fixed[c] if c in fixed else _exact_log2(beta[c])
            if hc is None:
                return False
            heights.append(hc)
        if sorted(heights) != list(range(h)):
            return False
        for c, hc in zip(kids, heights):
            ok = fits_fixed(c) if c in fixed else complete_at(c, hc)
            if not ok:
                return False
        return True

    return complete_at(root, claimed_height)


def alpha_star(
    inst: ValidatedInstance,
    feedback_vertices: AbstractSet[int],
    g: Mapping[int, int],
    sigma: Optional[Sequence[int]] = None,
    demands: Optional[Iterable[Arc]] = None,
) -> Dict[int, int]:
    """
    Lower-bound height estimate for every player

    Vertices in g's domain take their value from g. Every other vertex takes the
    least height above all its demand children that avoids the heights of demand
    siblings which are weaker or fixed. Evaluated weakest first.

    Args:
        inst: Validated instance (tournament and, unless overridden, demands)
        feedback_vertices: V(F); every one of them must be in g
        g: Fixed heights (guessed feedback heights, plus pinned heights if any)
        sigma: Strength order, strongest first (computed from a minimum FAS if omitted)
        demands: Demand arcs to use instead of inst.demands (the augmented set)

    Returns:
        Map from player to alpha-star value
    """
    unguessed = set(feedback_vertices) - set(g)
    if unguessed:
        raise PreconditionViolated(f"no guessed height for feedback vertices {sorted(unguessed)}")
    if sigma is None:
        from ..fas import minimum_fas
        sigma = minimum_fas(inst.tournament).sigma
    arcs = sorted(inst.demands if demands is None else demands)

    parent: Dict[int, int] = {}
    children: Dict[int, List[int]] = {}
    for u, v in arcs:
        if v in parent:
            raise PreconditionViolated(f"{v} has demand in-degree above 1")
        parent[v] = u
        children.setdefault(u, []).append(v)

    rank = {v: i for i, v in enumerate(sigma)}
    values: Dict[int, int] = {v: g[v] for v in g}
    for v in reversed(sigma):
        if v in values:
            continue
        low = 0
        for c in children.get(v, ()):
            if c not in values:
                raise PreconditionViolated(f"demand child {c} of {v} is neither weaker nor fixed")
            low = max(low, values[c] + 1)
        forbidden = set()
        u = parent.get(v)
        if u is not None:
            for w in children[u]:
                if w != v and (w in g or rank[w] > rank[v]):
                    forbidden.add(values[w])
        value = low
        while value in forbidden:
            value += 1
        values[v] = value
    return values


def is_compact(
    sba: RootedForest,
    inst: ValidatedInstance,
    feedback_vertices: AbstractSet[int],
    g: Mapping[int, int],
    sigma: Optional[Sequence[int]] = None,
) -> bool:
    """alpha_H(v) == alpha_star(v) for every demand loser in the forest"""
    estimate = alpha_star(inst, feedback_vertices, g, sigma)
    for v in inst.lose:
        if v in sba and alpha(sba, v) != estimate[v]:
            return False
    return True


def is_weakly_compact(
    sba: RootedForest,
    inst: ValidatedInstance,
    feedback_vertices: AbstractSet[int],
    sigma: Optional[Sequence[int]] = None,
) -> bool:
    """Compactness with g taken from the forest's own feedback heights"""
    g = {v: alpha(sba, v) for v in feedback_vertices if v in sba}
    return is_compact(sba, inst, feedback_vertices, g, sigma)
