"""Command-line interface.

Exit codes: 0 success; 1 usage error; 2 bipartite but not 4k-intercyclic
(without --oracle); 3 not bipartite; 4 unreadable or malformed input;
5 cycle budget or oracle size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .cycles import BUDGET_ENV, DEFAULT_CYCLE_BUDGET, Verdict, classify, enumerate_cycles
from .errors import (
    CycleBudgetExceeded,
    NotBipartiteError,
    NotIntercyclicError,
    OracleCapExceeded,
    ParseError,
)
from .formats import parse_graph
from .oracle import CAP_ENV, DEFAULT_ORACLE_CAP
from .permanental import oracle_report, per_cospectral_check, perm_poly
from .polynomial import format_poly

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_INTERCYCLIC = 2
EXIT_NOT_BIPARTITE = 3
EXIT_PARSE = 4
EXIT_LIMIT = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for non-intercyclic input
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_graph(source: str, fmt: str = "auto"):
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from exc
    return parse_graph(text, fmt)


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, NotBipartiteError):
        return EXIT_NOT_BIPARTITE
    if isinstance(exc, NotIntercyclicError):
        return EXIT_NOT_INTERCYCLIC
    if isinstance(exc, (CycleBudgetExceeded, OracleCapExceeded)):
        return EXIT_LIMIT
    raise exc


# -- per-graph jobs: return (exit code, text, json payload or None) -----------

def job_permpoly(source, fmt, budget, oracle):
    try:
        g = read_graph(source, fmt)
        try:
            report = perm_poly(g, budget=budget)
        except NotIntercyclicError:
            if not oracle:
                raise
            report = oracle_report(g, budget=budget)
    except Exception as exc:
        code = _exit_code(exc)
        if code == EXIT_NOT_INTERCYCLIC:
            msg = f"{exc}\nthe permanental formula needs a 4k-intercyclic graph; rerun with --oracle for small graphs"
        else:
            msg = str(exc)
        return code, msg, None
    cls = report.classification
    lines = [
        f"n: {report.n}",
        f"classification: {cls.summary()}",
        f"path: {report.path}",
        f"phi:   {format_poly(report.phi)}",
        f"phi_p: {format_poly(report.phi_p)}",
        f"f:     {format_poly(report.f)}",
        f"pi:    {format_poly(report.pi)}",
    ]
    return EXIT_OK, "\n".join(lines), report.to_json()


def job_classify(source, fmt, budget):
    try:
        g = read_graph(source, fmt)
        cls = classify(g, budget=budget)
    except Exception as exc:
        return _exit_code(exc), str(exc), None
    lines = [cls.summary()]
    if cls.verdict is Verdict.NOT_INTERCYCLIC:
        a, b = cls.witness
        lines.append(f"witness: {list(a.vertices)} {list(b.vertices)}")
    return EXIT_OK, "\n".join(lines), cls.to_json()


def job_cycles(source, fmt, budget, max_len):
    try:
        g = read_graph(source, fmt)
        cycles = enumerate_cycles(g, max_len=max_len, budget=budget)
    except Exception as exc:
        return _exit_code(exc), str(exc), None
    text = "\n".join(" ".join(map(str, c.vertices)) for c in cycles)
    payload = {"n": g.n, "count": len(cycles), "cycles": [list(c.vertices) for c in cycles]}
    return EXIT_OK, text, payload


def job_cospectral(source1, source2, fmt, budget):
    try:
        report = per_cospectral_check(read_graph(source1, fmt), read_graph(source2, fmt), budget)
    except Exception as exc:
        return _exit_code(exc), str(exc), None
    text = "\n".join(f"{k}: {str(v).lower()}" for k, v in report.to_json().items())
    return EXIT_OK, text, report.to_json()


# -- driver -------------------------------------------------------------------

def _emit(code, text, payload, as_json, out, err):
    if code != EXIT_OK:
        print(f"error: {text}", file=err)
        return
    if as_json:
        print(json.dumps(payload), file=out)
    elif text:
        print(text, file=out)


def _run_batch(directory, fn, extra, jobs, as_json, out, err):
    files = sorted(p for p in Path(directory).iterdir() if p.is_file())
    args = [(str(p),) + extra for p in files]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_call, [fn] * len(args), args))
    else:
        results = [fn(*a) for a in args]
    status = EXIT_OK
    batch = []
    for p, (code, text, payload) in zip(files, results):
        if status == EXIT_OK and code != EXIT_OK:
            status = code
        if as_json:
            entry = {"file": p.name, "exit": code}
            entry.update({"result": payload} if code == EXIT_OK else {"error": text})
            batch.append(entry)
        else:
            print(f"== {p.name} ==", file=out)
            if code == EXIT_OK:
                print(text, file=out)
            else:
                print(f"error (exit {code}): {text}", file=out)
    if as_json:
        print(json.dumps(batch), file=out)
    return status


def _call(fn, a):
    return fn(*a)


def build_parser() -> argparse.ArgumentParser:
    env_help = (
        f"environment: {BUDGET_ENV} sets the default cycle budget ({DEFAULT_CYCLE_BUDGET}); "
        f"{CAP_ENV} sets the oracle vertex cap ({DEFAULT_ORACLE_CAP})."
    )
    p = _Parser(
        prog="permpoly",
        description="Permanental polynomials of 4k-intercyclic bipartite graphs.",
        epilog=env_help + " Exit codes: 0 ok, 1 usage, 2 not 4k-intercyclic, "
        "3 not bipartite, 4 bad input, 5 budget/cap exceeded.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, batch=True):
        sp.add_argument("--format", choices=["auto", "edge_list", "graph6"], default="auto",
                        help="input format (default: sniff)")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--budget", type=int, default=None,
                        help=f"maximum number of cycles to list (default ${BUDGET_ENV} or {DEFAULT_CYCLE_BUDGET})")
        if batch:
            sp.add_argument("input", nargs="?", help="graph file, or - for stdin")
            sp.add_argument("--dir", help="process every file in this directory (sorted by name)")
            sp.add_argument("--jobs", type=int, default=1, help="worker processes for --dir")

    sp = sub.add_parser("permpoly", help="permanental polynomial report", epilog=env_help)
    common(sp)
    sp.add_argument("--oracle", action="store_true",
                    help="fall back to brute-force Sachs enumeration for non-intercyclic graphs")

    sp = sub.add_parser("classify", help="C4kFree / FourKIntercyclic / NotIntercyclic", epilog=env_help)
    common(sp)

    sp = sub.add_parser("cycles", help="list all simple cycles", epilog=env_help)
    common(sp)
    sp.add_argument("--max-len", type=int, default=None, help="only cycles up to this length")

    sp = sub.add_parser("cospectral", help="compare two graphs (cospectral / per-cospectral)",
                        epilog=env_help)
    common(sp, batch=False)
    sp.add_argument("input1")
    sp.add_argument("input2")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = args.budget
    if budget is None:
        budget = int(os.environ.get(BUDGET_ENV, DEFAULT_CYCLE_BUDGET))

    if args.command == "cospectral":
        code, text, payload = job_cospectral(args.input1, args.input2, args.format, budget)
        _emit(code, text, payload, args.json, out, err)
        return code

    if args.command == "permpoly":
        fn, extra = job_permpoly, (args.format, budget, args.oracle)
    elif args.command == "classify":
        fn, extra = job_classify, (args.format, budget)
    else:
        fn, extra = job_cycles, (args.format, budget, args.max_len)

    if args.dir:
        if args.input:
            parser.error("give either an input file or --dir, not both")
        if not Path(args.dir).is_dir():
            print(f"error: {args.dir} is not a directory", file=err)
            return EXIT_PARSE
        return _run_batch(args.dir, fn, extra, max(args.jobs, 1), args.json, out, err)
    if not args.input:
        parser.error("an input file (or - for stdin) is required")
    code, text, payload = fn(args.input, *extra)
    _emit(code, text, payload, args.json, out, err)
    return code


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
