"""
Greedy packing of parentless partial binomial arborescences

Roots of equal guessed size 2^a join into one of size 2^(a+1), the stronger
root on top, until some root reaches the requested size.
"""

import logging
from typing import Dict, Iterable, List, Sequence, Tuple

from ..arborescence.forest import WorkForest
from ..models.errors import PreconditionViolated
from ..utils.helpers import _is_power_of_two

logger = logging.getLogger(__name__)


def pack(q: WorkForest, players: Iterable[int], j: int, sigma: Sequence[int]) -> Tuple[WorkForest, int]:
    """
    Build a height-j partial binomial arborescence out of the roots in `players`

    Q is extended in place. While no root has guessed size 2^j, the two
    strongest roots sharing the largest repeated size are joined, stronger to
    weaker. Only vertices of `players` gain parents.

    Args:
        q: Partial solution
        players: Parentless vertices, each rooting a PBA of height at most j
        j: Target height
        sigma: Strength order, strongest first

    Returns:
        (q, root of the packed arborescence)

    Raises:
        PreconditionViolated: a vertex has a parent or a size that is not a power
            of two at most 2^j, the sizes sum to less than 2^j, or no two roots
            share a size
    """
    target = 1 << j
    rank = {v: i for i, v in enumerate(sigma)}
    roots: List[int] = sorted(set(players), key=rank.__getitem__)
    for w in roots:
        if q.parent(w) is not None:
            raise PreconditionViolated(f"{w} already has a parent")
        size = q.beta(w)
        if not _is_power_of_two(size) or size > target:
            raise PreconditionViolated(f"{w} has guessed size {size}, not a power of two up to {target}")
    total = sum(q.beta(w) for w in roots)
    if total < target:
        raise PreconditionViolated(f"guessed sizes sum to {total} < {target}")

    while True:
        for w in roots:
            if q.beta(w) == target:
                return q, w
        by_size: Dict[int, List[int]] = {}
        for w in roots:
            by_size.setdefault(q.beta(w), []).append(w)
        shared = [size for size, ws in by_size.items() if len(ws) >= 2]
        if not shared:
            raise PreconditionViolated(f"no two roots share a size below {target}")
        x, y = by_size[max(shared)][:2]
        q.add_arc(x, y)
        roots.remove(y)
        logger.debug(f"Pack: joined {x} -> {y}, size now {q.beta(x)}")
