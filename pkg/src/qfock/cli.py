"""Command line: ``qfock {straighten,basis,decomp,verify} ...``.

Exit codes: 0 success, 1 mismatch found by ``verify``, 2 usage error,
3 request beyond the supported size or memory cap.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import cache, hallalg
from .canonfock import decomposition_matrix, hall_basis, lt_basis
from .checks import SUITES, run_suite
from .combinat import format_partition
from .heckewedge import StraighteningError, straighten
from .laurent import ONE

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# largest weights computed on request; beyond them the answer is refused
WEIGHT_CAP = {"plus": 10, "minus": 10, "hall": 6, "decomp": 10, "verify": 6}


class ResourceCap(Exception):
    pass


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- rendering

def render_combination(vec: dict) -> str:
    """Terms in decreasing word order, e.g. ``-v^-1*(2,-1) - (1-v^-2)*(1,0)``."""
    terms = [(w, c) for w, c in sorted(vec.items(), reverse=True) if c]
    if not terms:
        return "0"
    out = ""
    for k, (word, c) in enumerate(terms):
        label = "(" + ",".join(str(x) for x in word) + ")"
        lead = max(e for e, _ in c.items())
        negative = c.coeff(lead) < 0
        mag = -c if negative else c
        if mag == ONE:
            body = label
        elif len(mag.items()) == 1:
            body = f"{mag.format()}*{label}"
        else:
            body = "(" + mag.format().replace(" ", "") + ")*" + label
        if k == 0:
            out = ("-" if negative else "") + body
        else:
            out += (" - " if negative else " + ") + body
    return out


def _parse_word(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace(" ", "").strip("()").split(",") if x != "")
    except ValueError as exc:
        raise UsageError(f"cannot parse word {text!r}") from exc


def _matrix_csv(order, rows) -> str:
    buf = io.StringIO()
    buf.write("# rows mu, columns lambda: " + " ".join(format_partition(p) for p in order) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _matrix_latex(order, rows) -> str:
    labels = [format_partition(p) for p in order]
    lines = ["\\begin{tabular}{c|" + "c" * len(order) + "}",
             " & " + " & ".join(f"${x}$" for x in labels) + " \\\\ \\hline"]
    for label, row in zip(labels, rows):
        lines.append(f"${label}$ & " + " & ".join(f"${x}$" for x in row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- commands

def cmd_straighten(args) -> int:
    if args.word is None:
        raise UsageError("--word is required")
    word = _parse_word(args.word)
    try:
        vec = straighten(word, args.n)
    except (StraighteningError, RecursionError) as exc:
        raise ResourceCap(str(exc)) from exc
    if args.format == "json":
        print(json.dumps({"word": list(word), "n": args.n,
                          "terms": [[list(w), c.to_json()] for w, c in sorted(vec.items(), reverse=True) if c]}))
    else:
        print(render_combination(vec))
    return EXIT_OK


def _check_weight(weight: int, kind: str) -> None:
    if weight < 0:
        raise UsageError("weight must be nonnegative")
    if weight > WEIGHT_CAP[kind]:
        raise ResourceCap(f"weight {weight} is out of desk scale for {kind} (cap {WEIGHT_CAP[kind]})")


def cmd_basis(args) -> int:
    if args.weight is None:
        raise UsageError("--weight is required")
    kind = args.kind
    _check_weight(args.weight, kind)
    if kind == "hall":
        table = hall_basis(args.weight, args.n, args.l)
    else:
        table = lt_basis(args.weight, args.n, "+" if kind == "plus" else "-", args.l)
    fmt = args.format
    if fmt == "json":
        print(json.dumps(table.to_json(), sort_keys=True))
    elif fmt == "csv":
        print(_matrix_csv(table.order, [[c.format().replace(" ", "") for c in row] for row in table.matrix()]), end="")
    else:
        print(_matrix_latex(table.order, [[c.to_latex() for c in row] for row in table.matrix()]), end="")
    return EXIT_OK


def cmd_decomp(args) -> int:
    if args.weight is None:
        raise UsageError("--weight is required")
    _check_weight(args.weight, "decomp")
    order, rows = decomposition_matrix(args.weight, args.n)
    if args.format == "json":
        print(json.dumps({"n": args.n, "weight": args.weight, "convention": "D[mu][lambda] = e+_{mu lambda}(1)",
                          "order": [list(p) for p in order], "matrix": rows}))
    elif args.format == "csv":
        print(_matrix_csv(order, rows), end="")
    else:
        print(_matrix_latex(order, rows), end="")
    return EXIT_OK


def _suite_job(job):
    name, n, max_weight, primes, cache_dir = job
    if primes:
        hallalg.set_primes(primes)
    if cache_dir:
        cache.set_cache_dir(cache_dir)
    return [c.to_json() for c in run_suite(name, n, max_weight)]


def cmd_verify(args) -> int:
    suite = args.suite or "all"
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    max_weight = 4 if args.max_weight is None else args.max_weight
    _check_weight(max_weight, "verify")
    names = SUITES if suite == "all" else (suite,)
    jobs = [(name, args.n, max_weight, args.primes, args.cache_dir) for name in names]
    if args.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(_suite_job, jobs))
    else:
        results = [_suite_job(job) for job in jobs]
    checks = [c for chunk in results for c in chunk]
    passed = all(c["passed"] for c in checks)
    report = {"n": args.n, "max_weight": max_weight, "suites": list(names), "passed": passed, "checks": checks}
    print(json.dumps(report, indent=2))
    return EXIT_OK if passed else EXIT_MISMATCH


# ---------------------------------------------------------------- entry point

def _primes(text: str) -> list:
    try:
        ps = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from exc
    if len(set(ps)) != len(ps):
        raise argparse.ArgumentTypeError("primes must be distinct")
    return ps


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="level (size of the cyclic quiver), at least 2")
    common.add_argument("--l", type=int, default=None, help="finite wedge length (default: Fock space)")
    common.add_argument("--weight", type=int, default=None)
    common.add_argument("--max-weight", type=int, default=None)
    common.add_argument("--kind", choices=("plus", "minus", "hall"), default="plus")
    common.add_argument("--word", default=None, help="comma separated integers, e.g. \"-1,2\"")
    common.add_argument("--format", choices=("text", "json", "csv", "latex"), default=None)
    common.add_argument("--primes", type=_primes, default=None, help="comma separated primes used for counting")
    common.add_argument("--cache-dir", default=None, help=f"disk cache (default: ${cache.ENV_VAR})")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--memory-mb", type=int, default=None, help="address space cap")
    common.add_argument("--suite", default=None, help="verify suite: " + ", ".join(SUITES + ("all",)))

    parser = argparse.ArgumentParser(prog="qfock", description="Canonical bases of the q-deformed Fock space.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("straighten", parents=[common], help="normal form of a wedge word")
    sub.add_parser("basis", parents=[common], help="basis table of one weight space")
    sub.add_parser("decomp", parents=[common], help="decomposition matrix at v = 1")
    sub.add_parser("verify", parents=[common], help="run verification suites")
    return parser


COMMANDS = {"straighten": cmd_straighten, "basis": cmd_basis, "decomp": cmd_decomp, "verify": cmd_verify}
DEFAULT_FORMAT = {"straighten": "text", "basis": "json", "decomp": "csv", "verify": "json"}


def _glue_word(argv: list) -> list:
    # "--word -1,2" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for a in it:
        if a == "--word":
            out.append("--word=" + next(it, ""))
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_word(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.format is None:
        args.format = DEFAULT_FORMAT[args.command]
    try:
        if args.n < 2:
            raise UsageError("--n must be at least 2")
        if args.threads < 1:
            raise UsageError("--threads must be positive")
        if args.memory_mb:
            import resource
            cap = args.memory_mb * 1024 * 1024
            resource.setrlimit(resource.RLIMIT_AS, (cap, cap))
        if args.primes:
            hallalg.set_primes(args.primes)
        if args.cache_dir:
            cache.set_cache_dir(args.cache_dir)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceCap, MemoryError) as exc:
        print(f"error: out of desk scale: {exc or 'memory cap reached'}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
