"""Command-line interface.

Subcommands: detect, simulate, reduce-demo, splitcover, rankaug.  Exit
codes are stable: 0 success, 2 usage error, 3 data/format error, 4
contract or verification failure.  Indices in output are 1-based; the
library API underneath is 0-based.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import gf2
from .channel import BscConfig, run_error_rate_experiment
from .detect import (
    ChannelParam,
    DetectionMethod,
    DetectionResult,
    detect_maxlog,
    detect_mdcd,
    detect_mlcd,
)
from .errors import BlindCodeError, OracleContractError
from .fileio import emit_matrix, load_candidate_set, load_matrix
from .linear_code import LinearCode, contains, mdd_decode
from .rankaug import build_zero_distance_code
from .reduction import exhaustive_mdcd_oracle, mdd_via_oracle, split_cover

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_CONTRACT = 4

CSV_HEADER = "method,p,n_obs,trials,errors,error_rate,ci95_halfwidth,seed"


class UsageError(Exception):
    """Command-line arguments are inconsistent beyond argparse's checks."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blindcode",
        description="Blind detection of binary linear codes from noisy words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_detect = sub.add_parser("detect", help="run one detector on observations")
    p_detect.add_argument("--candidates", required=True, help="candidate-set JSON file")
    p_detect.add_argument("--observations", required=True, help="observed words, matrix file")
    p_detect.add_argument(
        "--method", required=True, choices=[m.value for m in DetectionMethod]
    )
    p_detect.add_argument("--p", type=float, help="BSC crossover probability (mlcd only)")
    p_detect.add_argument("--output", choices=["text", "json"], default="text")

    p_sim = sub.add_parser("simulate", help="Monte Carlo detection error rates")
    p_sim.add_argument("--candidates", required=True)
    p_sim.add_argument("--p", type=float, required=True)
    p_sim.add_argument("--n-obs", type=int, required=True, help="observed words per trial")
    p_sim.add_argument("--trials", type=int, required=True)
    p_sim.add_argument("--seed", type=int, required=True)
    p_sim.add_argument(
        "--methods", required=True, help="comma-separated: mdcd,mlcd,maxlog"
    )
    p_sim.add_argument("--csv", help="output CSV path (default: stdout)")

    p_reduce = sub.add_parser(
        "reduce-demo", help="decode via a chain of detection-oracle calls"
    )
    p_reduce.add_argument("--generator", required=True, help="generator matrix file")
    p_reduce.add_argument("--word", required=True, help="single-row matrix file")
    p_reduce.add_argument(
        "--verify", action="store_true", help="check against exhaustive decoding"
    )

    p_split = sub.add_parser("splitcover", help="split a code into a covering triple")
    p_split.add_argument("--generator", required=True)

    p_rank = sub.add_parser(
        "rankaug", help="build a zero-distance code containing the observations"
    )
    p_rank.add_argument("--observations", required=True)
    p_rank.add_argument("--k", type=int, required=True, help="target code dimension")

    return parser


def _format_score(score: float) -> str:
    return str(score)


def _print_detection(result: DetectionResult, output: str) -> None:
    if output == "json":
        doc = {
            "chosen_index": result.chosen_index + 1,
            "scores": list(result.scores),
            "tie": result.tie,
            "method": result.method.value,
        }
        print(json.dumps(doc))
        return
    print(f"method: {result.method.value}")
    print(f"chosen: {result.chosen_index + 1}")
    print("scores: " + " ".join(_format_score(s) for s in result.scores))
    print(f"tie: {'yes' if result.tie else 'no'}")


def _cmd_detect(args: argparse.Namespace) -> int:
    method = DetectionMethod(args.method)
    if method is DetectionMethod.MLCD and args.p is None:
        raise UsageError("--p is required for method mlcd")
    if method is not DetectionMethod.MLCD and args.p is not None:
        raise UsageError(f"--p is only meaningful for method mlcd, not {method.value}")
    candidates = load_candidate_set(args.candidates)
    observations = load_matrix(args.observations)
    if method is DetectionMethod.MDCD:
        result = detect_mdcd(observations, candidates)
    elif method is DetectionMethod.MAXLOG:
        result = detect_maxlog(observations, candidates)
    else:
        result = detect_mlcd(observations, candidates, ChannelParam(args.p))
    _print_detection(result, args.output)
    return EXIT_OK


def _parse_methods(text: str) -> list[DetectionMethod]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    if not names:
        raise UsageError("--methods must name at least one detector")
    methods = []
    for name in names:
        try:
            methods.append(DetectionMethod(name))
        except ValueError:
            raise UsageError(f"unknown method {name!r}") from None
    return methods


def _cmd_simulate(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.n_obs < 1:
        raise UsageError("--n-obs must be >= 1")
    if not 0.0 <= args.p < 0.5:
        raise UsageError("--p must lie in [0, 0.5)")
    methods = _parse_methods(args.methods)
    if args.p == 0.0 and DetectionMethod.MLCD in methods:
        raise UsageError("mlcd requires p > 0; the noiseless channel is simulation-only")
    candidates = load_candidate_set(args.candidates)
    config = BscConfig(p=args.p, master_seed=args.seed)
    batch = run_error_rate_experiment(
        candidates, config, args.n_obs, args.trials, methods
    )

    lines = [CSV_HEADER]
    for outcome in batch.outcomes:
        lines.append(
            ",".join(
                [
                    outcome.method.value,
                    str(batch.p),
                    str(batch.num_words),
                    str(batch.trials),
                    str(outcome.errors),
                    str(outcome.error_rate),
                    str(outcome.ci95_halfwidth),
                    str(batch.master_seed),
                ]
            )
        )
        if outcome.ties:
            print(
                f"note: {outcome.method.value}: {outcome.ties} of "
                f"{outcome.trials} trials tied",
                file=sys.stderr,
            )
    csv_text = "\n".join(lines) + "\n"
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="") as handle:
            handle.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def _cmd_reduce_demo(args: argparse.Namespace) -> int:
    generator = load_matrix(args.generator)
    word_matrix = load_matrix(args.word)
    if word_matrix.num_rows != 1:
        raise UsageError("--word must contain exactly one row")
    word = word_matrix.row(0)

    codeword, trace = mdd_via_oracle(generator, word, exhaustive_mdcd_oracle)
    for step, chosen in enumerate(trace, start=1):
        if step < len(trace):
            print(f"step {step}: narrowed to rank-{chosen.num_rows} generator")
        else:
            print(f"step {step}: decoded word")
        for line in chosen.to_strings():
            print(line)
    distance = gf2.hamming_distance(word, codeword)
    print(f"codeword: {codeword.to_string()}")
    print(f"distance: {distance}")

    if args.verify:
        _, exact = mdd_decode(LinearCode(generator), word)
        if exact != distance:
            print(
                f"verification failed: oracle chain distance {distance}, "
                f"exhaustive distance {exact}",
                file=sys.stderr,
            )
            return EXIT_CONTRACT
        print(f"verified: exhaustive minimum distance is also {exact}")
    return EXIT_OK


def _cmd_splitcover(args: argparse.Namespace) -> int:
    generator = load_matrix(args.generator)
    triple = split_cover(generator)
    parts = [emit_matrix(g) for g in triple.as_tuple()]
    sys.stdout.write("\n".join(parts))
    return EXIT_OK


def _cmd_rankaug(args: argparse.Namespace) -> int:
    observations = load_matrix(args.observations)
    augmented = build_zero_distance_code(observations, args.k)
    for row in observations.rows:
        if not contains(augmented.code, row):
            print("verification failed: an observation row left the span", file=sys.stderr)
            return EXIT_CONTRACT
    sys.stdout.write(emit_matrix(augmented.code.generator))
    print("total_distance=0")
    return EXIT_OK


_HANDLERS = {
    "detect": _cmd_detect,
    "simulate": _cmd_simulate,
    "reduce-demo": _cmd_reduce_demo,
    "splitcover": _cmd_splitcover,
    "rankaug": _cmd_rankaug,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleContractError as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except (BlindCodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
