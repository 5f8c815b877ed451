"""
Line-oriented instance files

    n 4
    matrix -111
    matrix 0-11
    matrix 00-1
    matrix 000-
    demand 0 1
    round 0 1 0
    weight 0 1 3

A Tournament Fixing file carries `target <v>` instead of demand lines. Blank
lines and anything after '#' are ignored.
"""

import logging
from typing import Dict, List, Optional, Tuple, Union

from ..models.errors import InvalidTournament, NotPowerOfTwo, ParseError
from ..models.schemas import DemandInstance, TfInstance, TournamentDigraph
from ..tournament import validate_instance

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]
Instance = Union[DemandInstance, TfInstance]


def _ints(fields: List[str], count: int, keyword: str, line: int) -> List[int]:
    if len(fields) != count:
        raise ParseError(f"'{keyword}' takes {count} integer(s), got {len(fields)}", line=line)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"'{keyword}' arguments must be integers: {' '.join(fields)}", line=line) from None


def parse_instance(text: str) -> Instance:
    """
    Parse and validate an instance file

    Args:
        text: File contents

    Returns:
        DemandInstance, or TfInstance when the file has a target line

    Raises:
        ParseError: malformed line (with its line number) or inconsistent matrix
        NotPowerOfTwo, DemandNotAnArc, DuplicateDemand, BadRound, InvalidWeights:
            from validation
    """
    n: Optional[int] = None
    rows: List[str] = []
    first_row_line = 0
    demands: List[Arc] = []
    demand_lines: Dict[Arc, int] = {}
    rounds: Dict[Arc, int] = {}
    weights: Dict[Arc, int] = {}
    target: Optional[int] = None

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        keyword, *fields = content.split()
        if n is None:
            if keyword != "n":
                raise ParseError("file must start with 'n <players>'", line=number)
            (n,) = _ints(fields, 1, keyword, number)
            if n < 1:
                raise ParseError(f"player count must be positive, got {n}", line=number)
            continue
        if keyword == "matrix":
            if len(fields) != 1:
                raise ParseError("'matrix' takes one row string", line=number)
            if len(rows) == n:
                raise ParseError(f"more than {n} matrix rows", line=number)
            if not rows:
                first_row_line = number
            rows.append(fields[0])
            continue
        if len(rows) != n:
            raise ParseError(f"expected {n} matrix rows before '{keyword}', got {len(rows)}", line=number)
        if keyword in ("demand", "round", "weight"):
            values = _ints(fields, 2 if keyword == "demand" else 3, keyword, number)
            u, v = values[0], values[1]
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ParseError(f"({u}, {v}) does not name two distinct players", line=number)
            if keyword == "demand":
                demands.append((u, v))
                demand_lines.setdefault((u, v), number)
            elif keyword == "round":
                rounds[(u, v)] = values[2]
            else:
                weights[(u, v)] = values[2]
        elif keyword == "target":
            if target is not None:
                raise ParseError("more than one target", line=number)
            (target,) = _ints(fields, 1, keyword, number)
            if not 0 <= target < n:
                raise ParseError(f"target {target} is not a player", line=number)
        else:
            raise ParseError(f"unknown keyword '{keyword}'", line=number)

    if n is None:
        raise ParseError("empty instance file")
    if len(rows) != n:
        raise ParseError(f"expected {n} matrix rows, got {len(rows)}")
    try:
        tournament = TournamentDigraph.from_matrix(rows)
    except InvalidTournament as e:
        raise ParseError(str(e), line=first_row_line) from e

    if target is not None:
        if demands or rounds or weights:
            raise ParseError("a target file cannot carry demands, rounds or weights")
        if not tournament.is_power_of_two:
            raise NotPowerOfTwo(f"{n} players is not a power of two")
        return TfInstance(tournament=tournament, target=target)

    inst = DemandInstance(
        tournament=tournament,
        demands=tuple(demands),
        rounds=rounds or None,
        weights=weights or None,
    )
    validate_instance(inst)
    logger.debug(f"Parsed instance with n={n} and {len(demands)} demands")
    return inst


def serialize_instance(inst: Instance) -> str:
    """Canonical text form: matrix rows, then sorted demand, round and weight lines"""
    t = inst.tournament
    lines = [f"n {t.n}"]
    lines.extend(f"matrix {row}" for row in t.to_matrix())
    if isinstance(inst, TfInstance):
        lines.append(f"target {inst.target}")
        return "\n".join(lines) + "\n"
    for u, v in sorted(inst.demands):
        lines.append(f"demand {u} {v}")
    for (u, v), r in sorted((inst.rounds or {}).items()):
        lines.append(f"round {u} {v} {r}")
    for (u, v), w in sorted((inst.weights or {}).items()):
        lines.append(f"weight {u} {v} {w}")
    return "\n".join(lines) + "\n"
