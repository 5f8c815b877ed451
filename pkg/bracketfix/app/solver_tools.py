"""
Tool functions exposed by the tool server

Every tool takes instance files as text and returns a dict with "status" set to
"success" or "error"; no tool raises.
"""

import logging
import traceback
from typing import List, Optional

from ..fas import minimum_fas
from ..models.errors import BracketFixError
from ..models.schemas import DemandInstance, Seeding, TfInstance
from ..tournament import check_solution, simulate, validate_instance
from ..utils.helpers import _build_error_response
from .generators import gen_instance
from .instance_io import parse_instance, serialize_instance
from .pipeline import run_solver
from .reduction import reduce_tf
from .render import render_bracket

logger = logging.getLogger(__name__)


def _error(context: str, e: Exception) -> dict:
    logger.error(f"{context} failed: {e}")
    logger.error(f"Traceback: {traceback.format_exc()}")
    return _build_error_response(str(e), traceback.format_exc())


def solve_instance_tool(instance_text: str, algo: str = "dp", weighted: bool = False) -> dict:
    """
    Find a seeding under which every demanded match is played

    Args:
        instance_text: Instance file contents (demand or target file)
        algo: oracle, dp, xp or fpt
        weighted: Maximize the weight of played demands instead (oracle and dp)

    Returns:
        answer ("yes"/"no"), the seeding if any, and weights for weighted runs
    """
    logger.info(f"solve_instance_tool: algo={algo} weighted={weighted}")
    try:
        outcome = run_solver(parse_instance(instance_text), algo=algo, weighted=weighted)
        response = {
            "status": "success",
            "algo": outcome.algo,
            "answer": "yes" if outcome.answer else "no",
            "seeding": list(outcome.seeding.order) if outcome.seeding else None,
        }
        if outcome.best_weight is not None:
            response["best_weight"] = outcome.best_weight
            response["total_weight"] = outcome.total_weight
        return response
    except Exception as e:
        return _error("solve_instance_tool", e)


def verify_seeding_tool(instance_text: str, seeding: List[int]) -> dict:
    """
    Check which demands a seeding plays

    Args:
        instance_text: Demand instance file contents
        seeding: Bracket order, position i meets position i XOR 1

    Returns:
        ok flag, missed demands and demands played in the wrong round
    """
    try:
        inst = parse_instance(instance_text)
        if not isinstance(inst, DemandInstance):
            raise BracketFixError("verify needs a demand instance")
        report = check_solution(validate_instance(inst), Seeding(order=tuple(seeding)))
        return {
            "status": "success",
            "ok": report.ok,
            "missed": [list(arc) for arc in sorted(report.missed)],
            "round_violations": [list(arc) for arc in sorted(report.round_violations)],
        }
    except Exception as e:
        return _error("verify_seeding_tool", e)


def feedback_arc_set_tool(instance_text: str) -> dict:
    """
    Minimum feedback arc set of the instance's tournament

    Returns:
        k, the upset arcs and the strength order (strongest first)
    """
    try:
        fs = minimum_fas(parse_instance(instance_text).tournament)
        return {
            "status": "success",
            "k": fs.k,
            "arcs": [list(arc) for arc in sorted(fs.arcs)],
            "sigma": list(fs.sigma),
        }
    except Exception as e:
        return _error("feedback_arc_set_tool", e)


def generate_instance_tool(
    n: int,
    k: int = 0,
    demands: int = 0,
    mode: str = "yes",
    seed: int = 0,
    rounds: bool = False,
    max_weight: Optional[int] = None,
) -> dict:
    """
    Generate a seeded instance

    Args:
        n: Number of players (power of two)
        k: Arcs reversed after building an acyclic tournament
        demands: Number of demands
        mode: "yes" (demands from a played bracket), "uniform" or "upsets"
            (every minimum-feedback-arc-set upset demanded)
        seed: Random seed
        rounds: Pin every demand to a round
        max_weight: Attach weights in [1, max_weight]

    Returns:
        The instance file text
    """
    try:
        inst = gen_instance(n, k, demands, mode=mode, seed=seed, with_rounds=rounds, max_weight=max_weight)
        return {"status": "success", "instance_text": serialize_instance(inst)}
    except Exception as e:
        return _error("generate_instance_tool", e)


def reduce_tf_tool(instance_text: str) -> dict:
    """
    Reduce a target file to a demand instance that is yes iff the target can win

    Returns:
        The reduced instance file text and its demand count
    """
    try:
        tf = parse_instance(instance_text)
        if not isinstance(tf, TfInstance):
            raise BracketFixError("reduce needs a file with a target line")
        reduced = reduce_tf(tf)
        return {
            "status": "success",
            "instance_text": serialize_instance(reduced),
            "demand_count": len(reduced.demands),
        }
    except Exception as e:
        return _error("reduce_tf_tool", e)


def render_bracket_tool(instance_text: str, seeding: List[int], fmt: str = "text") -> dict:
    """
    Render the bracket a seeding produces

    Args:
        instance_text: Instance file contents
        seeding: Bracket order
        fmt: "text" or "dot"

    Returns:
        The rendering
    """
    try:
        inst = parse_instance(instance_text)
        sba, _ = simulate(inst.tournament, Seeding(order=tuple(seeding)))
        demands = set(inst.demands) if isinstance(inst, DemandInstance) else set()
        return {"status": "success", "format": fmt, "rendering": render_bracket(sba, fmt, demands)}
    except Exception as e:
        return _error("render_bracket_tool", e)
