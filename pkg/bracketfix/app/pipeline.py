"""
Solver dispatch shared by the command line and the tool server

Parses nothing: callers hand in a parsed instance and get back a SolveOutcome.
"""

import logging
from typing import Optional, Union

from pydantic import BaseModel, Field

from ..exact.oracle import oracle_max_weight, oracle_solve
from ..exact.subset_dp import dp_max_weight, dp_solve
from ..fixer.solvers import solve_fpt, solve_with_rounds, solve_xp
from ..models.errors import BadRound, BracketFixError
from ..models.schemas import DemandInstance, Seeding, TfInstance, ValidatedInstance
from ..tournament import validate_instance
from .reduction import solve_tf

logger = logging.getLogger(__name__)

ALGORITHMS = ("oracle", "dp", "xp", "fpt")


class SolveOutcome(BaseModel):
    """Answer of one solver run"""
    algo: str = Field(..., description="Algorithm used")
    answer: bool = Field(..., description="True when every demand is played (or the target wins)")
    seeding: Optional[Seeding] = Field(None, description="Witness seeding")
    best_weight: Optional[int] = Field(None, description="Weighted runs: best total weight")
    total_weight: Optional[int] = Field(None, description="Weighted runs: weight of all demands")


def dispatch(
    inst: ValidatedInstance,
    algo: str,
    max_n: Optional[int] = None,
    max_k: Optional[int] = None,
) -> Optional[Seeding]:
    """Run the named decision algorithm"""
    if algo == "oracle":
        return oracle_solve(inst, max_n=max_n)
    if algo == "dp":
        return dp_solve(inst, max_n=max_n)
    if algo in ("xp", "fpt"):
        if inst.rounds:
            return solve_with_rounds(inst, fpt=algo == "fpt", max_n=max_n, max_k=max_k)
        solver = solve_fpt if algo == "fpt" else solve_xp
        return solver(inst, max_n=max_n, max_k=max_k)
    raise BracketFixError(f"unknown algorithm {algo!r}; expected one of {ALGORITHMS}")


def run_solver(
    inst: Union[DemandInstance, TfInstance],
    algo: str = "dp",
    weighted: bool = False,
    max_n: Optional[int] = None,
    max_k: Optional[int] = None,
    rounds_strict: bool = False,
) -> SolveOutcome:
    """
    Solve a parsed instance

    Args:
        inst: Demand instance, or TF instance (solved through the reduction)
        algo: One of ALGORITHMS
        weighted: Maximize played demand weight instead of deciding (oracle and dp only)
        max_n: Player-count guard override
        max_k: Feedback-arc-set guard override
        rounds_strict: Require a pinned round on every demand

    Returns:
        SolveOutcome
    """
    logger.info(f"Solving with {algo}{' (weighted)' if weighted else ''}")
    if isinstance(inst, TfInstance):
        if weighted:
            raise BracketFixError("weighted solving needs a demand instance")
        seeding = solve_tf(inst, lambda reduced: dispatch(reduced, algo, max_n, max_k))
        return SolveOutcome(algo=algo, answer=seeding is not None, seeding=seeding)

    validated = validate_instance(inst)
    if rounds_strict:
        unpinned = validated.demands - set(validated.rounds)
        if unpinned:
            raise BadRound(f"no round given for demands {sorted(unpinned)}")

    if weighted:
        if algo == "oracle":
            best, seeding = oracle_max_weight(validated, max_n=max_n)
        elif algo == "dp":
            best, seeding = dp_max_weight(validated, max_n=max_n)
        else:
            raise BracketFixError("weighted solving is available for oracle and dp only")
        weights = validated.weights or {arc: 1 for arc in validated.demands}
        total = sum(weights.values())
        return SolveOutcome(algo=algo, answer=best == total, seeding=seeding, best_weight=best, total_weight=total)

    seeding = dispatch(validated, algo, max_n, max_k)
    return SolveOutcome(algo=algo, answer=seeding is not None, seeding=seeding)
