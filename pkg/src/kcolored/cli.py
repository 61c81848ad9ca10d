"""Command-line entry point.

Exit codes: 0 on success, 1 when the computation itself reports a negative
outcome (no kernel, failed campaign, counterexample), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .chroma_paths import k_closure
from .core_model import DigraphError, from_json
from .generators import GenParams, random_colored_smp
from .harness import Campaign, search_conjecture, verify_theorem
from .kernel_solver import find_k_colored_kernel
from .pattern_census import C3, C3C3, C4, C4C4, C5, enumerate_pattern, hypothesis_report

THEOREM_ALIASES = {
    "t1": "T1_k_ge_4",
    "t2": "T2_k3",
    "t3": "T3_k2",
    "t4k2": "T4_bipartite_k2",
    "t4k3": "T4_bipartite_k3",
    "x1b": "X_bipartite_tournament_k1",
    "x1m": "X_multipartite_tournament_k1",
}
PATTERN_ALIASES = {"c3": C3, "c4": C4, "c5": C5, "c3c3": C3C3, "c4c4": C4C4}


class UsageError(Exception):
    pass


def _parts(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated part sizes, got {text!r}") from None
    if len(sizes) < 2 or min(sizes) < 1:
        raise argparse.ArgumentTypeError(f"need at least two positive part sizes, got {text!r}")
    return sizes


def _bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "y"):
        return True
    if lowered in ("0", "false", "no", "n"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _read_digraph(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return from_json(text)
    except DigraphError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        print(text)
    else:
        Path(output).write_text(text + "\n", encoding="utf-8")


def cmd_check(args) -> int:
    D = _read_digraph(args.input)
    result = find_k_colored_kernel(D, args.k, cap=args.cap)
    print(json.dumps(result.to_dict(), sort_keys=True) if args.json else result.describe())
    return 0 if result.found else 1


def cmd_closure(args) -> int:
    D = _read_digraph(args.input)
    _emit(k_closure(D, args.k).to_json(), args.output)
    return 0


def cmd_census(args) -> int:
    D = _read_digraph(args.input)
    occurrences = list(enumerate_pattern(D, PATTERN_ALIASES[args.pattern]))
    if args.json:
        print(json.dumps({"pattern": PATTERN_ALIASES[args.pattern], "count": len(occurrences),
                          "occurrences": [o.to_dict() for o in occurrences]}, sort_keys=True))
        return 0
    print(f"{len(occurrences)} occurrence(s) of {PATTERN_ALIASES[args.pattern]}")
    for occ in occurrences:
        print(f"  vertices {list(occ.vertices)}  colors {sorted(occ.colors)}")
    return 0


def cmd_hypotheses(args) -> int:
    D = _read_digraph(args.input)
    print(json.dumps(hypothesis_report(D).to_dict(), sort_keys=True, indent=2))
    return 0


def cmd_verify(args) -> int:
    campaign = Campaign(
        theorem_id=THEOREM_ALIASES[args.theorem],
        trials=args.trials,
        part_sizes=tuple(args.parts),
        m=tuple(args.m),
        p_symmetric=tuple(args.psym),
        seed=args.seed,
        k=args.k,
        rejection_samples=args.rejection_samples,
        rejection_m=tuple(args.rejection_m),
    )
    report = verify_theorem(campaign, workers=args.workers)
    if args.report:
        Path(args.report).write_text(report.to_json() + "\n", encoding="utf-8")
    print(report.to_json() if args.json else report.summary())
    return 0 if report.verified else 1


def cmd_search(args) -> int:
    report, _ = search_conjecture(
        args.parts, allow_symmetric=args.symmetric, coarsenings=args.coarsenings,
        checkpoint=args.checkpoint, seed=args.seed, workers=args.workers,
        checkpoint_every=args.checkpoint_every, max_orientations=args.max_orientations,
        dedup=args.dedup,
    )
    if args.report:
        Path(args.report).write_text(report.to_json() + "\n", encoding="utf-8")
    print(report.to_json() if args.json else report.summary())
    for cx in report.counterexamples:
        print("counterexample candidate: " + json.dumps(cx, sort_keys=True), file=sys.stderr)
    return 1 if report.counterexamples else 0


def cmd_generate(args) -> int:
    params = GenParams(part_sizes=args.parts, p_symmetric=args.psym,
                       orientation_bias=args.bias, m=args.m, seed=args.seed)
    _emit(random_colored_smp(params).to_json(), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kcolored", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="find a k-colored kernel")
    p.add_argument("--input", required=True, help="digraph JSON file, or - for stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=24, help="largest vertex count the solver accepts")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("closure", help="write the k-colored closure")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--output", help="output path (default: stdout)")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("census", help="list occurrences of a pattern")
    p.add_argument("--input", required=True)
    p.add_argument("--pattern", choices=sorted(PATTERN_ALIASES), required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("hypotheses", help="evaluate every coloring hypothesis")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_hypotheses)

    p = sub.add_parser("verify", help="run a theorem campaign")
    p.add_argument("--theorem", choices=sorted(THEOREM_ALIASES), required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--parts", type=_parts, action="append", required=True,
                   help="comma-separated part sizes; repeat to give several choices")
    p.add_argument("--m", type=int, action="append", required=True, help="color count; repeatable")
    p.add_argument("--psym", type=float, action="append", help="symmetric-pair probability; repeatable")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int)
    p.add_argument("--rejection-samples", type=int, default=0)
    p.add_argument("--rejection-m", type=int, action="append")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report", help="also write the JSON report here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-conjecture", help="exhaustive search for 1-colored kernel counterexamples")
    p.add_argument("--parts", type=_parts, required=True)
    p.add_argument("--symmetric", type=_bool, default=True)
    p.add_argument("--coarsenings", type=int, default=0)
    p.add_argument("--checkpoint", help="checkpoint file; resumed from when it exists")
    p.add_argument("--checkpoint-every", type=int, default=64)
    p.add_argument("--max-orientations", type=int)
    p.add_argument("--dedup", action="store_true", help="skip instances with a repeated invariant hash")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("generate", help="sample a colored semicomplete multipartite digraph")
    p.add_argument("--parts", type=_parts, required=True)
    p.add_argument("--psym", type=float, default=0.0)
    p.add_argument("--bias", type=float, default=0.5)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_generate)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "psym", None) is None and args.command == "verify":
        args.psym = [0.0, 0.3]
    if getattr(args, "rejection_m", None) is None and args.command == "verify":
        args.rejection_m = [3]
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        # bad parameters, budgets, checkpoints and oversized inputs all subclass ValueError
        print(f"kcolored {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
