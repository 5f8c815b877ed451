"""
bracketfix command line

Exit codes: 0 yes (the seeding is the first line of output), 10 no, 2 input error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from ..config import get_settings
from ..fas import minimum_fas
from ..models.errors import BracketFixError, RoundConflict
from ..models.schemas import DemandInstance, Seeding, TfInstance
from ..tournament import check_solution, simulate, validate_instance
from .generators import MODES, gen_instance
from .instance_io import parse_instance, serialize_instance
from .pipeline import ALGORITHMS, run_solver
from .reduction import reduce_tf
from .render import FORMATS, render_bracket

logger = logging.getLogger(__name__)

EXIT_YES = 0
EXIT_NO = 10
EXIT_INPUT = 2


def _read(path: str):
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = _read(args.file)
    outcome = run_solver(
        inst,
        algo=args.algo,
        weighted=args.weighted,
        max_n=args.max_n,
        max_k=args.max_k,
        rounds_strict=args.rounds_strict,
    )
    if outcome.seeding is None:
        print("no")
        return EXIT_NO
    print(outcome.seeding)
    if outcome.best_weight is not None:
        print(f"weight {outcome.best_weight} of {outcome.total_weight}")
    if args.render:
        # TF seedings are over the original players
        demands = set(inst.demands) if isinstance(inst, DemandInstance) else set()
        sba, _ = simulate(inst.tournament, outcome.seeding)
        print(render_bracket(sba, args.render, demands), end="")
    return EXIT_YES if outcome.answer else EXIT_NO


def _cmd_gen(args: argparse.Namespace) -> int:
    inst = gen_instance(
        args.n,
        args.k,
        args.demands,
        mode=args.mode,
        seed=args.seed,
        with_rounds=args.rounds,
        max_weight=args.max_weight,
    )
    print(serialize_instance(inst), end="")
    return EXIT_YES


def _cmd_reduce(args: argparse.Namespace) -> int:
    tf = _read(args.file)
    if not isinstance(tf, TfInstance):
        raise BracketFixError("reduce needs a file with a target line")
    print(serialize_instance(reduce_tf(tf)), end="")
    return EXIT_YES


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = _read(args.file)
    if not isinstance(inst, DemandInstance):
        raise BracketFixError("verify needs a demand instance")
    validated = validate_instance(inst)
    seeding = Seeding(order=tuple(int(p) for p in args.seeding.split()))
    report = check_solution(validated, seeding)
    if report.ok:
        print("ok")
        return EXIT_YES
    for u, v in sorted(report.missed):
        print(f"missed {u} {v}")
    for u, v in sorted(report.round_violations):
        print(f"wrong round {u} {v}")
    return EXIT_NO


def _cmd_fas(args: argparse.Namespace) -> int:
    inst = _read(args.file)
    fs = minimum_fas(inst.tournament)
    print(f"k {fs.k}")
    print("sigma " + " ".join(str(v) for v in fs.sigma))
    for u, v in sorted(fs.arcs):
        print(f"arc {u} {v}")
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bracketfix", description="Fix single-elimination brackets so demanded matches are played")
    parser.add_argument("--log-level", default=None, help="Logging level (default from BRACKETFIX_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Find a seeding that plays every demand")
    solve.add_argument("file", help="Instance file (demand or target)")
    solve.add_argument("--algo", choices=ALGORITHMS, default="dp")
    solve.add_argument("--weighted", action="store_true", help="Maximize the weight of played demands")
    solve.add_argument("--rounds-strict", action="store_true", help="Require a round line for every demand")
    solve.add_argument("--render", choices=FORMATS, default=None, help="Also print the bracket")
    solve.add_argument("--max-n", type=int, default=None, help="Override the solver's player-count guard")
    solve.add_argument("--max-k", type=int, default=None, help="Override the fixer's feedback-arc-set guard")
    solve.set_defaults(func=_cmd_solve)

    gen = sub.add_parser("gen", help="Generate a seeded instance")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, default=0, help="Arcs reversed after building an acyclic tournament")
    gen.add_argument("--demands", type=int, default=0)
    gen.add_argument("--mode", choices=MODES, default="yes")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--rounds", action="store_true", help="Pin every demand to a round")
    gen.add_argument("--max-weight", type=int, default=None, help="Attach weights in [1, MAX_WEIGHT]")
    gen.set_defaults(func=_cmd_gen)

    reduce = sub.add_parser("reduce", help="Turn a target file into a demand instance")
    reduce.add_argument("file")
    reduce.set_defaults(func=_cmd_reduce)

    verify = sub.add_parser("verify", help="Check a seeding against an instance")
    verify.add_argument("file")
    verify.add_argument("--seeding", required=True, help='Space-separated players, e.g. "0 3 1 2"')
    verify.set_defaults(func=_cmd_verify)

    fas = sub.add_parser("fas", help="Print a minimum feedback arc set and strength order")
    fas.add_argument("file")
    fas.set_defaults(func=_cmd_fas)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the bracketfix console script"""
    parser = build_parser()
    args = parser.parse_args(argv)
    level = (args.log_level or get_settings().log_level).upper()
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except RoundConflict as e:
        print(f"no: {e}", file=sys.stderr)
        return EXIT_NO
    except (BracketFixError, ValidationError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
