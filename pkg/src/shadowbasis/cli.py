"""Command-line entry point: ``shadowbasis <command> [options]``.

Exit codes: 0 all checks pass, 1 a check was falsified, 2 usage or parse
error, 3 a size cap was hit.
"""
from __future__ import annotations

import argparse
import io
import json
import random
import sys
from typing import Callable

from . import __version__
from .basis import check_vanishing, group_matrix, verify_basis
from .characters import character_table, verify_graded_decomposition
from .errors import InvalidInputError, ParseError, SizeLimitError
from .perms import DEFAULT_ENUMERATION_CAP, diagram, enumerate_group, parse_one_line
from .shadow import iterated_shadows, schensted_insert, shadow_iterations, shadow_monomial
from .stats import (
    DEFAULT_FAST_MAX_N,
    GradedSeries,
    StatTable,
    check_log_concave,
    check_unimodal,
    count_c,
    count_fast,
    histogram_csv,
    series_from_table,
)

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

# Hilbert series printed as worked examples in the literature, keyed by (n, r).
REFERENCE_SERIES = {(3, 2): (1, 9, 22, 9, 1)}


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.buf = io.StringIO()

    def line(self, text: str = "") -> None:
        self.buf.write(text + "\n")

    def json(self, payload: dict) -> None:
        self.buf.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")

    def flush(self, out: str | None) -> None:
        text = self.buf.getvalue()
        if out:
            with open(out, "w", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _tableau_text(t) -> str:
    return " / ".join(",".join(map(str, row)) for row in t) or "(empty)"


def cmd_schensted(args, out: Output) -> int:
    w = parse_one_line(args.word, args.r)
    colored = w.r > 1 or any(w.kappa)
    if colored:
        layers = diagram(w)
        mono = shadow_monomial(w)
        base_points = layers[0]
    else:
        base_points = w.sigma.points()
    pair = iterated_shadows(base_points)
    decs = shadow_iterations(base_points)
    if out.fmt == "json":
        payload = {"schema": 1, "word": args.word, "r": w.r,
                   "iterations": [d.to_dict() for d in decs]}
        if colored:
            payload["layers"] = [sorted(list(p) for p in layer) for layer in layers]
            payload["shadow_monomial"] = str(mono)
        else:
            ins = schensted_insert(w.sigma)
            payload.update({"P": [list(r) for r in ins.P], "Q": [list(r) for r in ins.Q],
                            "agrees": ins == pair})
        out.json(payload)
        return EXIT_OK
    if colored:
        for color, layer in enumerate(layers):
            out.line(f"C{color}: " + " ".join(f"({i},{j})" for i, j in sorted(layer)))
        out.line(f"shadow monomial: {mono}")
    else:
        ins = schensted_insert(w.sigma)
        out.line(f"P: {_tableau_text(ins.P)}")
        out.line(f"Q: {_tableau_text(ins.Q)}")
        out.line(f"shadow rows agree with insertion: {ins == pair}")
    for level, dec in enumerate(decs, 1):
        out.line(f"iteration {level}:")
        for line in dec.lines:
            pts = " ".join(f"({i},{j})" for i, j in line.points)
            cs = " ".join(f"({i},{j})" for i, j in line.corners) or "-"
            out.line(f"  line {pts} corners {cs}")
        out.line("  shadow set: " + (" ".join(f"({i},{j})" for i, j in sorted(dec.shadow_set)) or "-"))
    return EXIT_OK


def _series_payload(s: GradedSeries) -> dict:
    return {"path": s.path, "coeffs": [str(c) for c in s.coeffs], "text": str(s)}


def _reference_diff(series: GradedSeries) -> dict | None:
    ref = REFERENCE_SERIES.get((series.n, series.r))
    if ref is None:
        return None
    top = max(len(ref), len(series.coeffs))
    got = list(series.coeffs) + [0] * (top - len(series.coeffs))
    want = list(ref) + [0] * (top - len(ref))
    diffs = [{"degree": d, "computed": got[d], "reference": want[d]} for d in range(top) if got[d] != want[d]]
    return {"reference": list(ref), "reference_total": sum(ref), "computed_total": sum(got),
            "agrees": not diffs, "differences": diffs}


def cmd_hilbert(args, out: Output) -> int:
    paths = ["enumerate", "fast"] if args.path == "both" else [args.path]
    series = []
    for p in paths:
        args.path = p
        series.append(series_from_table(_table(args)))
    problems = []
    paths_agree = all(s.coeffs == series[0].coeffs for s in series)
    if not paths_agree:
        problems.append({"category": "internal_inconsistency", "detail": "enumeration and closed form disagree"})
    ref = _reference_diff(series[0])
    if ref is not None and not ref["agrees"]:
        problems.append({"category": "reference_mismatch", "detail": ref["differences"]})
    if out.fmt == "json":
        out.json({"schema": 1, "command": "hilbert", "n": args.n, "r": args.r,
                  "series": [_series_payload(s) for s in series], "paths_agree": paths_agree,
                  "reference": ref, "problems": problems})
    elif out.fmt == "csv":
        out.line("d," + ",".join(s.path for s in series))
        for d in range(len(series[0].coeffs)):
            out.line(f"{d}," + ",".join(str(s.coeffs[d]) for s in series))
    else:
        for s in series:
            out.line(f"{s.path}: {s}")
        if len(series) > 1:
            out.line(f"paths agree: {paths_agree}")
        if ref is not None:
            if ref["agrees"]:
                out.line("reference series: agrees")
            else:
                out.line(f"reference series: MISMATCH (reference total {ref['reference_total']}, "
                         f"computed total {ref['computed_total']})")
                for d in ref["differences"]:
                    out.line(f"  q^{d['degree']}: computed {d['computed']}, reference {d['reference']}")
    return EXIT_FALSIFIED if problems else EXIT_OK


def _table(args) -> StatTable:
    if args.path == "enumerate":
        return count_c(args.n, args.r, args.cap, args.threads)
    return count_fast("c", args.n, args.r, args.max_n)


def cmd_analyze(args, out: Output) -> int:
    table = _table(args)
    series = series_from_table(table)
    lc_k = check_log_concave(table)
    lc_q = check_log_concave(series)
    top = args.r * args.n
    consistent = sorted(top - i for i in lc_q.violations) == list(lc_k.violations)
    uni = check_unimodal(table)
    if out.fmt == "json":
        out.json({"schema": 1, "command": "analyze", "n": args.n, "r": args.r, "path": table.path,
                  "log_concave": lc_k.log_concave, "violations_k": list(lc_k.violations),
                  "violations_q": list(lc_q.violations), "reports_consistent": consistent,
                  "unimodal": uni.unimodal, "peak_k": uni.peak,
                  "witness": list(uni.witness) if uni.witness else None})
    else:
        out.line(f"n={args.n} r={args.r} path={table.path}")
        out.line(f"log-concave: {lc_k.log_concave}")
        out.line("violations at k: " + (",".join(map(str, lc_k.violations)) or "none"))
        out.line("violations at q-degree: " + (",".join(map(str, lc_q.violations)) or "none"))
        out.line(f"unimodal: {uni.unimodal}" + (f" (peak at k={uni.peak})" if uni.unimodal else f" (witness {uni.witness})"))
    return EXIT_OK if consistent else EXIT_FALSIFIED


def cmd_strata(args, out: Output) -> int:
    report = verify_graded_decomposition(args.n, args.r, "fast")
    if out.fmt == "json":
        out.json({"schema": 1, "command": "strata", "n": args.n, "r": args.r,
                  "rows": [{"k": row.k, "num_lambdas": row.num_lambdas, "sum_dim_sq": str(row.sum_dim_sq),
                            "hilbert_coeff": str(row.hilbert_coeff), "match": row.match} for row in report.rows],
                  "cumulative_ok": report.cumulative_ok, "ok": report.ok})
    else:
        out.line("k,num_lambdas,sum_dim_sq,hilbert_coeff,match")
        for row in report.rows:
            out.line(f"{row.k},{row.num_lambdas},{row.sum_dim_sq},{row.hilbert_coeff},{str(row.match).lower()}")
    return EXIT_OK if report.ok else EXIT_FALSIFIED


def cmd_verify(args, out: Output) -> int:
    checks = {}
    basis = verify_basis(args.n, args.r, args.cap)
    checks["basis"] = {"ok": not basis.falsified, **basis.to_dict()}
    failures = check_vanishing(args.n, args.r, args.cap)
    checks["vanishing"] = {"ok": not failures, "failures": [list(f) for f in failures[:20]]}
    dec = verify_graded_decomposition(args.n, args.r, "fast")
    checks["decomposition"] = {"ok": dec.ok}
    enum = count_c(args.n, args.r, args.cap)
    fast = count_fast("c", args.n, args.r, args.max_n)
    checks["count_paths"] = {"ok": enum.same_counts(fast)}
    elements = list(enumerate_group(args.n, args.r, args.cap))
    rng = random.Random(args.seed)
    pairs = [(rng.choice(elements), rng.choice(elements)) for _ in range(25)] if elements else []
    checks["matrix_product"] = {"ok": all(group_matrix(u * v) == group_matrix(u) @ group_matrix(v) for u, v in pairs),
                                "samples": len(pairs), "seed": args.seed}
    ok = all(c["ok"] for c in checks.values())
    if out.fmt == "json":
        out.json({"schema": 1, "command": "verify", "n": args.n, "r": args.r, "ok": ok, "checks": checks})
    else:
        for name, c in checks.items():
            out.line(f"{name}: {'pass' if c['ok'] else 'FAIL'}")
        out.line(f"all: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FALSIFIED


def cmd_histogram(args, out: Output) -> int:
    r = {"a": 1, "b": 2}.get(args.kind, args.r)
    if args.path == "enumerate":
        table = count_c(args.n, r, args.cap, args.threads)
    else:
        table = count_fast(args.kind, args.n, r, args.max_n)
    if args.out and out.fmt == "csv":
        histogram_csv(table, args.out)
        return EXIT_OK
    if out.fmt == "json":
        out.json(table.to_json(args.cap))
    else:
        out.line("k,count")
        support = [k for k, v in enumerate(table.counts) if v]
        for k in range(support[0], support[-1] + 1) if support else ():
            out.line(f"{k},{table[k]}")
    return EXIT_OK


def cmd_chartable(args, out: Output) -> int:
    table = character_table(args.n, args.r)
    ok = table.orthogonality_holds()
    if out.fmt == "json":
        payload = table.to_json()
        payload["orthogonal"] = ok
        out.json(payload)
    else:
        out.line("class sizes: " + " ".join(map(str, table.class_sizes)))
        for lab, row in zip(table.labels, table.values):
            out.line(f"{lab}: " + " ".join(str(x) for x in row))
        out.line(f"row orthogonality: {ok}")
    return EXIT_OK if ok else EXIT_FALSIFIED


COMMANDS: dict[str, tuple[Callable, str]] = {
    "schensted": (cmd_schensted, "text"),
    "hilbert": (cmd_hilbert, "text"),
    "analyze": (cmd_analyze, "text"),
    "strata": (cmd_strata, "csv"),
    "verify": (cmd_verify, "text"),
    "histogram": (cmd_histogram, "csv"),
    "chartable": (cmd_chartable, "json"),
}


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_nonnegative, default=3)
    common.add_argument("--r", type=_positive, default=None)
    common.add_argument("--path", choices=["enumerate", "fast", "both"], default="fast")
    common.add_argument("--format", choices=["csv", "json", "text"], default=None)
    common.add_argument("--out", default=None)
    common.add_argument("--cap", type=_positive, default=None)
    common.add_argument("--threads", type=_nonnegative, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", type=_positive, default=DEFAULT_FAST_MAX_N, help="closed-form size bound")

    parser = argparse.ArgumentParser(prog="shadowbasis", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("schensted", parents=[common], help="P, Q and shadow lines of a word")
    p.add_argument("word", help="one-line notation, e.g. 5,1,3,6,7,2,4 or 2^1,5^0,3^0")
    sub.add_parser("hilbert", parents=[common], help="Hilbert series of the quotient")
    sub.add_parser("analyze", parents=[common], help="log-concavity and unimodality")
    sub.add_parser("strata", parents=[common], help="graded module strata against the Hilbert series")
    sub.add_parser("verify", parents=[common], help="basis, vanishing and decomposition certificates")
    p = sub.add_parser("histogram", parents=[common], help="k,count CSV of a, b or c counts")
    p.add_argument("--kind", choices=["a", "b", "c"], default="c")
    sub.add_parser("chartable", parents=[common], help="character table as JSON")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler, default_fmt = COMMANDS[args.command]
    fmt = args.format or default_fmt
    if args.r is None:
        args.r = 2 if args.command != "schensted" else None
    if args.cap is None:
        args.cap = 200 if args.command == "verify" else DEFAULT_ENUMERATION_CAP
    if args.path == "both" and args.command != "hilbert":
        args.path = "fast"
    out = Output(fmt)
    try:
        code = handler(args, out)
    except SizeLimitError as exc:
        print(f"shadowbasis {args.command}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, InvalidInputError, OSError) as exc:
        print(f"shadowbasis {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not (args.command == "histogram" and args.out and fmt == "csv"):
        try:
            out.flush(args.out)
        except OSError as exc:
            print(f"shadowbasis {args.command}: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    return code


if __name__ == "__main__":
    raise SystemExit(main())
