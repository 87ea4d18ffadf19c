"""Command-line front end: ``equipart <command> ...``.

Exit codes: 0 success, 1 infeasible ``color`` (or missing q-partition),
2 disagreement with the oracle, 64 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from equipart.bench import run_bench
from equipart.coloring import plan_for_k, realize, validate
from equipart.errors import BudgetExceeded, EquipartError, ParseError
from equipart.oracle import oracle_chi_star, oracle_k_colorable
from equipart.qpartition import maximal_qpartition, minimal_qpartition
from equipart.threshold import PartSizes, chi_star

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_DISAGREE = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}")


def parse_parts(text: str) -> PartSizes:
    tokens = [t.strip() for t in text.split(",")]
    if not text.strip() or any(t == "" for t in tokens):
        raise ParseError(f"expected a comma-separated list of positive integers, got {text!r}")
    try:
        sizes = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer token in {text!r}") from None
    if any(n < 1 for n in sizes):
        raise ParseError(f"part sizes must be positive: {text!r}")
    return PartSizes(tuple(sizes))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="equipart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name: str, help: str, parts: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if parts:
            p.add_argument("parts", help="comma-separated part sizes, e.g. 3,5,6")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    command("threshold", "critical level h and the equitable chromatic threshold")
    p = command("color", "equitable k-coloring (class sizes and vertex colors)")
    p.add_argument("--k", type=_positive, required=True)
    p = command("sweep", "feasibility of every k = 1..max-k")
    p.add_argument("--max-k", type=_positive)
    p = command("verify", "cross-check against the exhaustive oracle")
    p.add_argument("--max-k", type=_positive)
    p = command("bench", "time chi_star on random instances of doubling size", parts=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-l", type=_positive, default=10**6)
    p.add_argument("--steps", type=_positive, default=11)
    p.add_argument("--max-n", type=_positive, default=10**6)
    p.add_argument("--repeat", type=_positive, default=3)
    p = command("partition", "minimal and maximal q-partitions of n", parts=False)
    p.add_argument("n", type=_positive)
    p.add_argument("--q", type=_positive, required=True)
    return parser


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(doc))
    else:
        print(text)


def _threshold(args) -> int:
    report = chi_star(parse_parts(args.parts))
    r = report.reason
    text = "\n".join([
        f"parts: {','.join(map(str, report.parts))}",
        f"s*: {report.s_star}",
        f"h: {report.h} ({r.kind.value}, witnesses {', '.join(map(str, r.witnesses))})",
        f"chi*: {report.chi_star}",
    ])
    _emit(args, report.to_dict(), text)
    return EXIT_OK


def _color(args) -> int:
    parts = parse_parts(args.parts)
    plan = plan_for_k(parts, args.k)
    if plan is None:
        _emit(args, {"parts": list(parts), "k": args.k, "feasible": False}, "infeasible")
        return EXIT_INFEASIBLE
    coloring = realize(plan)
    verdict = validate(coloring)
    assert verdict.ok, verdict
    colors = [[coloring.color_of[(i, v)] for v in range(n)] for i, n in enumerate(parts)]
    doc = {
        "parts": list(parts),
        "k": plan.k,
        "feasible": True,
        "classes": plan.as_lists(),
        "colors": colors,
    }
    lines = [f"k={plan.k}"]
    for i, (c, row) in enumerate(zip(plan.classes, colors)):
        lines.append(f"part {i}: classes {' + '.join(map(str, c))}; colors {' '.join(map(str, row))}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def _sweep(args) -> int:
    parts = parse_parts(args.parts)
    max_k = args.max_k or parts.total
    rows = [(k, plan_for_k(parts, k) is not None) for k in range(1, max_k + 1)]
    doc = {"parts": list(parts), "rows": [{"k": k, "feasible": ok} for k, ok in rows]}
    text = "\n".join(f"{k}\t{'feasible' if ok else 'infeasible'}" for k, ok in rows)
    _emit(args, doc, text)
    return EXIT_OK


def _verify(args) -> int:
    parts = parse_parts(args.parts)
    max_k = args.max_k or parts.total
    problems = []
    threshold = None
    if len(parts) >= 2:
        threshold = chi_star(parts).chi_star
        expected = oracle_chi_star(parts)
        if threshold != expected:
            problems.append(f"chi_star {threshold} != oracle {expected}")
    for k in range(1, max_k + 1):
        plan = plan_for_k(parts, k)
        truth = oracle_k_colorable(parts, k)
        if (plan is not None) != truth:
            problems.append(f"k={k}: plan {'found' if plan else 'missing'}, oracle says {truth}")
        elif plan is not None and not validate(realize(plan)).ok:
            problems.append(f"k={k}: plan does not validate")
    doc = {
        "parts": list(parts),
        "max_k": max_k,
        "chi_star": threshold,
        "agree": not problems,
        "problems": problems,
    }
    text = "agreement for all k" if not problems else "\n".join(["DISAGREEMENT", *problems])
    _emit(args, doc, text)
    return EXIT_OK if not problems else EXIT_DISAGREE


def _bench(args) -> int:
    rows = run_bench(args.max_l, args.steps, args.max_n, args.seed, args.repeat)
    doc = {"seed": args.seed, "rows": [{"l": l, "seconds": t} for l, t in rows]}
    _emit(args, doc, "\n".join(f"{l}\t{t:.6f}" for l, t in rows))
    return EXIT_OK


def _partition(args) -> int:
    n, q = args.n, args.q
    lo, hi = minimal_qpartition(n, q), maximal_qpartition(n, q)
    if lo is None:
        _emit(args, {"n": n, "q": q, "exists": False}, f"no {q}-partition of {n}")
        return EXIT_INFEASIBLE
    doc = {
        "n": n,
        "q": q,
        "exists": True,
        "minimal": {"a": lo.a, "b": lo.b, "terms": list(lo.terms())},
        "maximal": {"a": hi.a, "b": hi.b, "terms": list(hi.terms())},
    }
    text = f"minimal {q}-partition of {n}: {lo}\nmaximal {q}-partition of {n}: {hi}"
    _emit(args, doc, text)
    return EXIT_OK


_COMMANDS = {
    "threshold": _threshold,
    "color": _color,
    "sweep": _sweep,
    "verify": _verify,
    "bench": _bench,
    "partition": _partition,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"oracle budget exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EquipartError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
