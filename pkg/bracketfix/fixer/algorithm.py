"""
One fixing pass for a fixed guess

Vertices are processed weakest first. A vertex of estimated height a needs a
child of every height below a; missing children are packed out of weaker
parentless vertices. Whatever stays parentless at the end is packed into the
final bracket, which is then re-verified before it is handed out.
"""

import logging
from typing import AbstractSet, Iterable, Mapping, Optional, Tuple

from ..arborescence.forest import RootedForest, WorkForest
from ..arborescence.heights import alpha, alpha_star, is_binomial_arborescence
from ..models.errors import InvalidForest, PreconditionViolated
from ..models.schemas import FeedbackStructure, ValidatedInstance
from .pack import pack

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


def verify_sba(inst: ValidatedInstance, s_aug: Iterable[Arc], sba: RootedForest) -> bool:
    """Spanning binomial arborescence of T that plays every (augmented) demand in its pinned round"""
    roots = sba.roots()
    if len(roots) != 1 or len(sba) != inst.n:
        return False
    if not is_binomial_arborescence(sba, roots[0]):
        return False
    arcs = sba.arc_set()
    if not set(s_aug) <= arcs:
        return False
    t = inst.tournament
    if any(not t.beats(u, v) for u, v in arcs):
        return False
    return all(alpha(sba, v) == r for (_, v), r in inst.rounds.items())


def run_fixing_pass(
    inst: ValidatedInstance,
    s_aug: Iterable[Arc],
    fs: FeedbackStructure,
    g: Mapping[int, int],
    feedback_vertices: Optional[AbstractSet[int]] = None,
    estimate: Optional[Mapping[int, int]] = None,
) -> Optional[RootedForest]:
    """
    Try to complete the augmented demands into a bracket under guess g

    Args:
        inst: Validated instance
        s_aug: Demands plus guessed feedback parents
        fs: Feedback arc set and strength order
        g: Fixed heights: the guessed feedback heights and any pinned heights
        feedback_vertices: Vertices whose guessed size comes from g
            (defaults to V(F))
        estimate: alpha-star for (s_aug, g), computed if omitted

    Returns:
        The spanning binomial arborescence, or None if the guess is rejected
    """
    s_aug = frozenset(s_aug)
    fvs = fs.feedback_vertices if feedback_vertices is None else frozenset(feedback_vertices)
    if estimate is None:
        estimate = alpha_star(inst, fvs, g, fs.sigma, s_aug)
    rank = fs.rank

    try:
        q = WorkForest(range(inst.n), s_aug, fixed={v: g[v] for v in fvs})
    except InvalidForest as e:
        logger.debug(f"Rejected: augmented demands are not a forest ({e})")
        return None

    try:
        for v in reversed(fs.sigma):
            present = {q.beta(c) for c in q.children(v)}
            for j in range(estimate[v]):
                size = 1 << j
                if size in present:
                    continue
                pool = [w for w in q.roots() if rank[w] > rank[v] and q.beta(w) <= size]
                if sum(q.beta(w) for w in pool) < size:
                    logger.debug(f"Rejected: {v} cannot get a child of height {j}")
                    return None
                _, w = pack(q, pool, j, fs.sigma)
                q.add_arc(v, w)
        leftover = q.roots()
        if sum(q.beta(w) for w in leftover) < inst.n:
            logger.debug("Rejected: parentless vertices too small for the final bracket")
            return None
        pack(q, leftover, inst.log_n, fs.sigma)
    except PreconditionViolated as e:
        logger.debug(f"Rejected: {e}")
        return None

    sba = q.freeze()
    if not verify_sba(inst, s_aug, sba):
        logger.warning(f"Fixing pass produced an invalid bracket for guess {dict(g)}; rejecting it")
        return None
    return sba
