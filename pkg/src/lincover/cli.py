"""Command-line interface: solve, verify, alpha, gen, fuzz.

Exit codes: 0 success, 1 input error, 2 budget exhausted, 3 verification
failed, 4 fuzz found failures.  Certificates and summaries going to stdout
are byte-deterministic for fixed flags and seeds; timings and diagnostics
go to stderr.  ANSI color is used only for PASS/FAIL words on a terminal
and is disabled by the NO_COLOR environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .core import Hypergraph, ParseError, parse_hypergraph, serialize_hypergraph
from .cover import (
    InvariantViolation,
    certificate_from_json,
    certificate_to_json,
    solve,
)
from .search import BudgetExhausted, SearchBudget, alpha
from .verify import verify

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3
EXIT_FUZZ = 4


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one random instance; generation is a pure function of these."""

    n: int
    p3: float
    p2: float
    seed: int

    def __post_init__(self):
        if not 0 <= self.p3 <= 1 or not 0 <= self.p2 <= 1:
            raise ValueError("edge probabilities must lie in [0, 1]")
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")


def generate_instance(spec: GenSpec) -> Hypergraph:
    """Seeded instance generator.

    One Mersenne-Twister draw per candidate edge: all 3-subsets of the
    vertex range in lexicographic order, then all 2-subsets, so identical
    specs produce identical instances on every platform.
    """
    rng = random.Random(spec.seed)
    edges = []
    for tri in combinations(range(spec.n), 3):
        if rng.random() < spec.p3:
            edges.append(tri)
    for pair in combinations(range(spec.n), 2):
        if rng.random() < spec.p2:
            edges.append(pair)
    return Hypergraph(spec.n, tuple(edges))


def _colorize(word: str, good: bool) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return word
    code = "32" if good else "31"
    return f"\x1b[{code}m{word}\x1b[0m"


def _budget_from(args) -> SearchBudget:
    return SearchBudget(node_limit=args.budget_nodes, time_limit=args.budget_secs)


def _add_budget_flags(sub) -> None:
    sub.add_argument(
        "--budget-nodes", type=int, default=10_000_000,
        help="max search nodes per phase (default 1e7)",
    )
    sub.add_argument(
        "--budget-secs", type=float, default=30.0,
        help="max seconds per search phase (default 30)",
    )


def _read_instance(path: str) -> Hypergraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_hypergraph(text)


def cmd_solve(args) -> int:
    try:
        h = _read_instance(args.instance)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    started = time.monotonic()
    try:
        cert = solve(h, _budget_from(args), assert_level=getattr(args, "assert"))
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    payload = certificate_to_json(cert)
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)
    print(
        f"solved n={h.n} m={len(h.edges)}: {len(cert.cycles)} cycles, "
        f"bound {cert.alpha_bound}, {time.monotonic() - started:.3f}s",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        h = _read_instance(args.instance)
        cert = certificate_from_json(Path(args.certificate).read_text())
    except (OSError, ParseError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cert.instance != h:
        print("error: instance mismatch between file and certificate", file=sys.stderr)
        return EXIT_INPUT
    mode = "compute" if args.alpha == "compute" else "trust_bound"
    report = verify(h, cert, alpha_mode=mode, budget=_budget_from(args))
    if args.format == "json":
        print(json.dumps(report.to_json_obj(), separators=(",", ":")))
    else:
        text = report.to_text()
        plain = "result: PASS" if report.ok else "result: FAIL"
        colored = f"result: {_colorize('PASS' if report.ok else 'FAIL', report.ok)}"
        print(text.replace(plain, colored))
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_alpha(args) -> int:
    try:
        h = _read_instance(args.instance)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        result = alpha(h, _budget_from(args))
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(f"alpha {result.size}")
    print("witness " + " ".join(str(v) for v in sorted(result.vertices)))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(args.n, args.p3, args.p2, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    h = generate_instance(spec)
    text = (
        f"# gen n={spec.n} p3={spec.p3} p2={spec.p2} seed={spec.seed}\n"
        + serialize_hypergraph(h)
    )
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    a, b = int(lo), int(hi if hi else lo)
    if a < 0 or b < a:
        raise ValueError(f"bad range {text!r}")
    return a, b


def cmd_fuzz(args) -> int:
    try:
        lo, hi = _parse_range(args.n_range)
        if not 0 <= args.p3 <= 1 or not 0 <= args.p2 <= 1:
            raise ValueError("probabilities must lie in [0, 1]")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    budget = _budget_from(args)
    save_dir = Path(args.save_failures) if args.save_failures else None
    if save_dir:
        save_dir.mkdir(parents=True, exist_ok=True)

    master = random.Random(args.seed)
    failures = 0
    slack_histogram: dict[int, int] = {}
    max_cover = 0
    started = time.monotonic()
    for i in range(args.count):
        n = master.randrange(lo, hi + 1)
        inst_seed = master.getrandbits(63)
        h = generate_instance(GenSpec(n, args.p3, args.p2, inst_seed))
        failure_note = None
        cert = None
        report = None
        try:
            cert = solve(h, budget, assert_level=getattr(args, "assert"))
            report = verify(h, cert, alpha_mode="compute", budget=budget)
            if not report.ok:
                failure_note = "verification failed"
        except (BudgetExhausted, InvariantViolation) as exc:
            failure_note = f"{type(exc).__name__}: {exc}"
        if failure_note is None:
            slack = report.alpha_value - len(cert.cycles)
            slack_histogram[slack] = slack_histogram.get(slack, 0) + 1
            max_cover = max(max_cover, len(cert.cycles))
        else:
            failures += 1
            print(f"instance {i}: {failure_note}", file=sys.stderr)
            if save_dir:
                (save_dir / f"fail_{i:05d}.instance").write_text(
                    serialize_hypergraph(h)
                )
                if cert is not None:
                    (save_dir / f"fail_{i:05d}.cert.json").write_text(
                        certificate_to_json(cert)
                    )
                detail = (
                    json.dumps(report.to_json_obj(), separators=(",", ":"))
                    if report is not None
                    else json.dumps({"error": failure_note})
                )
                (save_dir / f"fail_{i:05d}.report.json").write_text(detail + "\n")
    elapsed = time.monotonic() - started

    print(f"instances {args.count}")
    print(f"failures {failures}")
    print("alpha-minus-cover histogram:")
    for slack in sorted(slack_histogram):
        print(f"  slack {slack}: {slack_histogram[slack]}")
    print(f"max cover size {max_cover}")
    print(f"elapsed {elapsed:.2f}s", file=sys.stderr)
    return EXIT_FUZZ if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lincover",
        description=(
            "Cover a mixed hypergraph's vertices with at most alpha(H) "
            "edge-disjoint linear cycles, and verify such certificates."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_solve = subs.add_parser("solve", help="produce a cover certificate")
    p_solve.add_argument("instance", help="instance file ('-' for stdin)")
    p_solve.add_argument(
        "--assert", choices=["none", "cheap", "full"], default="cheap",
        help="internal consistency checking level (default cheap)",
    )
    p_solve.add_argument("--out", help="certificate output path (default stdout)")
    _add_budget_flags(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_verify = subs.add_parser("verify", help="check a certificate independently")
    p_verify.add_argument("instance")
    p_verify.add_argument("certificate")
    p_verify.add_argument(
        "--alpha", choices=["compute", "trust"], default="compute",
        help="recompute alpha exactly or trust the certificate bound",
    )
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    _add_budget_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_alpha = subs.add_parser("alpha", help="exact independence number + witness")
    p_alpha.add_argument("instance")
    _add_budget_flags(p_alpha)
    p_alpha.set_defaults(func=cmd_alpha)

    p_gen = subs.add_parser("gen", help="write a seeded random instance")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p3", type=float, default=0.3)
    p_gen.add_argument("--p2", type=float, default=0.0)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", help="instance output path (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_fuzz = subs.add_parser(
        "fuzz", help="generate, solve and verify many instances"
    )
    p_fuzz.add_argument("--count", type=int, default=100)
    p_fuzz.add_argument("--n-range", default="1..8", help="vertex counts, e.g. 1..8")
    p_fuzz.add_argument("--p3", type=float, default=0.3)
    p_fuzz.add_argument("--p2", type=float, default=0.2)
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument(
        "--assert", choices=["none", "cheap", "full"], default="cheap"
    )
    p_fuzz.add_argument("--save-failures", help="directory for failing cases")
    _add_budget_flags(p_fuzz)
    p_fuzz.set_defaults(func=cmd_fuzz)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
