"""Text and DOT renderings of a played bracket"""

import logging
from typing import AbstractSet, List, Optional, Tuple

from ..arborescence.forest import RootedForest
from ..arborescence.heights import alpha
from ..models.errors import BracketFixError
from ..tournament import sba_to_seeding

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]

FORMATS = ("text", "dot")


def _matches(sba: RootedForest) -> List[Tuple[int, int, int]]:
    """(round, winner, loser), by round then by the winner's bracket position"""
    position = {p: i for i, p in enumerate(sba_to_seeding(sba).order)}
    games = [(alpha(sba, loser), winner, loser) for winner, loser in sba.arcs()]
    games.sort(key=lambda m: (m[0], position[m[1]]))
    return games


def render_bracket(sba: RootedForest, fmt: str = "text", demands: Optional[AbstractSet[Arc]] = None) -> str:
    """
    Render a spanning binomial arborescence

    Args:
        sba: The played bracket
        fmt: "text" for one "round r: w def l" line per match, "dot" for a Graphviz digraph
        demands: Arcs to highlight in DOT output

    Returns:
        Rendered bracket, newline-terminated

    Raises:
        NotAnSBA: input is not a spanning binomial arborescence
    """
    if fmt not in FORMATS:
        raise BracketFixError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    games = _matches(sba)
    if fmt == "text":
        return "".join(f"round {r}: {w} def {l}\n" for r, w, l in games)

    demands = demands or set()
    lines = ["digraph bracket {"]
    lines.extend(f"  {v};" for v in sba.vertices)
    for r, w, l in sorted(games, key=lambda m: (m[1], m[2])):
        style = f'label="round {r}"'
        if (w, l) in demands:
            style += ", color=blue, penwidth=2"
        lines.append(f"  {w} -> {l} [{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
