"""
Feedback-arc-set parameterized solvers

solve_xp guesses a parent and a height for every feedback vertex; solve_fpt
drops the parent guess when every upset loser already has a demand parent;
solve_with_rounds pins the height of every demand loser to its round. All three
share one search loop.
"""

import logging
from typing import AbstractSet, Dict, Iterable, Optional

from ..arborescence.forest import RootedForest
from ..arborescence.heights import alpha_star
from ..config import get_settings
from ..fas import minimum_fas
from ..models.errors import InvalidForest, PreconditionViolated, PropertyOneViolated, RoundConflict, TooLarge
from ..models.schemas import FeedbackStructure, Seeding, ValidatedInstance
from ..tournament import sba_to_seeding
from .algorithm import run_fixing_pass
from .guesses import ParentGuess, augment_demands, iter_height_guesses, iter_parent_guesses, sanity_check_guess

logger = logging.getLogger(__name__)


def check_round_conflicts(inst: ValidatedInstance) -> None:
    """
    Reject pinned rounds that no bracket can honour

    Raises:
        RoundConflict: a demand pinned no earlier than the pinned demand its
            winner loses, two demands of one winner pinned to the same round, or
            a player pinned to lose in round r after more than r pinned demand wins
    """
    rounds = inst.rounds
    for (u, v), r in rounds.items():
        for (a, b), r2 in rounds.items():
            if a == v and r2 >= r:
                raise RoundConflict(f"{v} loses to {u} in round {r} but plays ({a}, {b}) in round {r2}")
            if a == u and b != v and r2 == r:
                raise RoundConflict(f"{u} is pinned to play {v} and {b} both in round {r}")
        if len(inst.demand_children.get(v, ())) > r:
            raise RoundConflict(f"{v} loses in round {r} but has {len(inst.demand_children[v])} demand wins")


def _pins(inst: ValidatedInstance) -> Dict[int, int]:
    return {v: r for (_, v), r in inst.rounds.items()}


def _guard_n(inst: ValidatedInstance, max_n: Optional[int]) -> None:
    limit = get_settings().fixer_max_n if max_n is None else max_n
    if inst.n > limit:
        raise TooLarge(f"fixer refuses n={inst.n} (limit {limit})")


def _prepare(inst: ValidatedInstance, fs: Optional[FeedbackStructure], max_k: Optional[int]) -> FeedbackStructure:
    k_limit = get_settings().fixer_max_k if max_k is None else max_k
    if fs is None:
        fs = minimum_fas(inst.tournament, limit=k_limit)
    elif fs.k > k_limit:
        raise TooLarge(f"fixer refuses k={fs.k} (limit {k_limit})")
    if inst.rounds:
        check_round_conflicts(inst)
    return fs


def _search(
    inst: ValidatedInstance,
    fs: FeedbackStructure,
    feedback_vertices: AbstractSet[int],
    parent_guesses: Iterable[ParentGuess],
) -> Optional[RootedForest]:
    """First guess, in enumeration order, whose fixing pass succeeds"""
    pins = _pins(inst)
    tried = 0
    for parents in parent_guesses:
        s_aug = augment_demands(inst, parents)
        try:
            RootedForest(range(inst.n), s_aug)
        except InvalidForest:
            continue
        bottom = next((v for v, p in parents.items() if p is None), None)
        for g in iter_height_guesses(feedback_vertices, inst.log_n, s_aug, pinned=pins, bottom=bottom):
            fixed = {**pins, **g}
            try:
                estimate = alpha_star(inst, feedback_vertices, fixed, fs.sigma, s_aug)
            except PreconditionViolated as e:
                logger.debug(f"Skipping guess {g}: {e}")
                continue
            if not sanity_check_guess(s_aug, feedback_vertices, fixed, estimate, inst.n, bottom):
                continue
            tried += 1
            sba = run_fixing_pass(inst, s_aug, fs, fixed, feedback_vertices, estimate)
            if sba is not None:
                logger.info(f"Accepted guess parents={parents} heights={g} after {tried} passes")
                return sba
    logger.info(f"Every guess rejected ({tried} fixing passes run)")
    return None


def solve_xp(
    inst: ValidatedInstance,
    fs: Optional[FeedbackStructure] = None,
    max_n: Optional[int] = None,
    max_k: Optional[int] = None,
) -> Optional[Seeding]:
    """
    Decide the instance by guessing parents and heights of all feedback vertices

    Pinned rounds, when present, are honoured.

    Args:
        inst: Validated instance
        fs: Feedback structure (a minimum one is computed if omitted)
        max_n: Override of the player-count guard
        max_k: Override of the feedback-arc-set guard

    Returns:
        A seeding playing every demand, or None

    Raises:
        TooLarge: n or k above the guards
        RoundConflict: contradictory pinned rounds
    """
    _guard_n(inst, max_n)
    if inst.trivially_no:
        logger.info("XP: trivially no")
        return None
    fs = _prepare(inst, fs, max_k)
    logger.info(f"XP: n={inst.n}, k={fs.k}, feedback vertices {sorted(fs.feedback_vertices)}")
    sba = _search(inst, fs, fs.feedback_vertices, iter_parent_guesses(inst, fs.feedback_vertices))
    return None if sba is None else sba_to_seeding(sba)


def solve_fpt(
    inst: ValidatedInstance,
    fs: Optional[FeedbackStructure] = None,
    max_n: Optional[int] = None,
    max_k: Optional[int] = None,
) -> Optional[Seeding]:
    """
    Decide an instance where every upset loser already loses a demand

    Only the losers of feedback arcs get a height guess; no parents are guessed.

    Raises:
        PropertyOneViolated: some feedback arc's loser has no demand parent
        TooLarge: n or k above the guards
        RoundConflict: contradictory pinned rounds
    """
    _guard_n(inst, max_n)
    if inst.trivially_no:
        logger.info("FPT: trivially no")
        return None
    fs = _prepare(inst, fs, max_k)
    orphans = fs.heads - inst.lose
    if orphans:
        raise PropertyOneViolated(f"upset losers {sorted(orphans)} have no demand parent")
    logger.info(f"FPT: n={inst.n}, k={fs.k}, guessed vertices {sorted(fs.heads)}")
    sba = _search(inst, fs, fs.heads, [{}])
    return None if sba is None else sba_to_seeding(sba)


def solve_with_rounds(
    inst: ValidatedInstance,
    fpt: bool = False,
    fs: Optional[FeedbackStructure] = None,
    max_n: Optional[int] = None,
    max_k: Optional[int] = None,
) -> Optional[Seeding]:
    """
    Decide an instance whose demands (all or some) carry a pinned round

    Thin dispatch to solve_xp or solve_fpt; the shared search loop turns pins into
    fixed heights.

    The loser of a demand pinned to round r gets height r; unpinned demand
    losers take their alpha-star height as usual.

    Args:
        inst: Validated instance with rounds
        fpt: Use the parent-free search (requires every upset loser to lose a demand)
        fs: Feedback structure (computed if omitted)
        max_n: Override of the player-count guard
        max_k: Override of the feedback-arc-set guard

    Raises:
        RoundConflict: pins contradict each other before any search
    """
    if not inst.rounds:
        logger.info("No pinned rounds; solving without them")
    solver = solve_fpt if fpt else solve_xp
    return solver(inst, fs=fs, max_n=max_n, max_k=max_k)
