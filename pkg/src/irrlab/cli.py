"""Command-line entry point.

Exit codes: 0 success / verified, 1 a verification finding, 2 usage or input error.
Reports are JSON with sorted keys; ``elapsed_ms`` is the only non-deterministic field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Any, Iterator

from . import extremal, oracle
from .errors import IrrlabError
from .graph import Graph, degree_sequence, parse_edge_list_text, parse_graph6, to_graph6
from .irregularity import irr_t, report

EXIT_OK, EXIT_FINDING, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _read_graphs(path: str, fmt: str) -> Iterator[tuple[int, Graph]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    if fmt == "graph6":
        for lineno, line in enumerate(text.split("\n"), start=1):
            if not line.strip():
                continue
            try:
                yield lineno, parse_graph6(line)
            except IrrlabError as exc:
                raise InputError(f"{path}:{lineno}: {exc}") from exc
    else:
        try:
            yield from parse_edge_list_text(text)
        except IrrlabError as exc:
            raise InputError(f"{path}: {exc}") from exc


def _tsv(rows: list[dict], columns: list[str]) -> str:
    def cell(v: Any) -> str:
        if isinstance(v, (list, tuple)):
            return ",".join(str(x) for x in v)
        return str(v)

    lines = ["\t".join(columns)]
    lines.extend("\t".join(cell(r[c]) for c in columns) for r in rows)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- commands

def cmd_compute(args: argparse.Namespace) -> tuple[dict, bool | None]:
    rows = []
    for lineno, g in _read_graphs(args.input, args.format):
        row = report(g).as_dict()
        row["line"] = lineno
        rows.append(row)
    return {"graphs": rows}, None


def _member(eg: extremal.ExtremalGraph) -> dict:
    return {
        "graph6": to_graph6(eg.graph),
        "mask": hex(eg.spec.bits),
        "q": eg.spec.q,
        "degree_sequence": list(degree_sequence(eg.graph)),
        "irr_t": irr_t(eg.graph),
    }


def cmd_extremal(args: argparse.Namespace) -> tuple[dict, bool | None]:
    if args.action == "value":
        return {"n": args.n, "max_total_irregularity": extremal.max_total_irregularity(args.n)}, None
    if args.action == "construct":
        try:
            bits = int(args.mask, 16)
        except ValueError:
            raise InputError(f"--mask must be a hexadecimal literal, got {args.mask!r}") from None
        eg = extremal.construct_extremal(extremal.ExtremalSpec.from_bits(args.n, args.q, bits))
        out = _member(eg)
        out.update(n=args.n, eq7_value=extremal.eq7_value(args.n, args.q),
                   optional_pairs=[list(p) for p in extremal.optional_pairs(args.n, args.q)])
        return out, None
    members = [_member(eg) for eg in extremal.enumerate_extremal_family(args.n)]
    return {"n": args.n, "count": len(members), "members": members}, None


def _n_range(args: argparse.Namespace, default_min: int, default_max: int) -> range:
    if args.n is not None:
        return range(args.n, args.n + 1)
    lo = default_min if args.n_min is None else args.n_min
    hi = default_max if args.n_max is None else args.n_max
    if lo > hi:
        raise InputError(f"--n-min {lo} exceeds --n-max {hi}")
    return range(lo, hi + 1)


def cmd_oracle(args: argparse.Namespace) -> tuple[dict, bool | None]:
    force, threads = args.force, args.threads
    if args.target == "theorem":
        rows, ok = [], True
        for n in _n_range(args, 2, 12):
            best, arg = oracle.bruteforce_max_over_sequences(n, threads=threads, force=force)
            closed = extremal.max_total_irregularity(n)
            match = best == closed
            ok &= match
            rows.append({"n": n, "oracle_max": best, "closed_form": closed, "match": match,
                         "argmax": sorted((list(d) for d in arg), reverse=True)})
        return {"per_n": rows, "mismatches": [r["n"] for r in rows if not r["match"]]}, ok
    if args.target == "trees":
        rows, ok = [], True
        for n in _n_range(args, 2, 14):
            best, arg = oracle.bruteforce_tree_max(n, force=force)
            star_seq = (n - 1,) + (1,) * (n - 1)
            match = best == extremal.tree_max(n) and (n < 3 or arg == {star_seq})
            ok &= match
            rows.append({"n": n, "oracle_max": best, "closed_form": extremal.tree_max(n),
                         "argmax": sorted((list(d) for d in arg), reverse=True), "match": match})
        return {"per_n": rows, "mismatches": [r["n"] for r in rows if not r["match"]]}, ok
    if args.target == "census":
        rows, ok = [], True
        for n in _n_range(args, 4, 4):
            res = oracle.extremal_census(n, threads=threads, force=force)
            closed = extremal.max_total_irregularity(n)
            closed_under_complement = oracle.census_complement_closed(res)
            good = res.max_value == closed and res.family_subset_confirmed and closed_under_complement
            ok &= good
            row = res.as_dict()
            row.update(closed_form=closed, complement_closed=closed_under_complement,
                       family_count=2 ** (n // 2 - 1) if n >= 4 else None, match=good)
            rows.append(row)
        return {"per_n": rows, "mismatches": [r["n"] for r in rows if not r["match"]]}, ok
    n_max = args.n_max if args.n_max is not None else (args.n if args.n is not None else 7)
    audits = oracle.audit_bounds(n_max, threads=threads, force=force)
    return {"audits": [a.as_dict() for a in audits]}, all(not a.violations for a in audits)


def cmd_tree(args: argparse.Namespace) -> tuple[dict, bool | None]:
    chains = []
    for lineno, g in _read_graphs(args.input, args.format):
        chain = extremal.star_ascent(g)
        chains.append({
            "line": lineno,
            "steps": len(chain) - 1,
            "chain": [{"graph6": to_graph6(t) if t.order <= 62 else None,
                       "degree_sequence": list(degree_sequence(t)),
                       "irr_t": irr_t(t)} for t in chain],
        })
    return {"ascents": chains}, None


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=["json", "tsv"], default="json")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--force", action="store_true",
                        help=f"override oracle size guards (also {oracle.GUARD_ENV}=1)")

    p = argparse.ArgumentParser(prog="irrlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="irr and irr_t of input graphs")
    c.add_argument("--input", required=True)
    c.add_argument("--format", choices=["graph6", "edges"], default="graph6")

    e = sub.add_parser("extremal", parents=[common], help="maximum-irr_t graphs")
    e.add_argument("action", choices=["value", "construct", "enumerate"])
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--q", type=int, default=1)
    e.add_argument("--mask", default="0x0")

    o = sub.add_parser("oracle", parents=[common], help="brute-force verification")
    o.add_argument("target", choices=["theorem", "trees", "census", "audit"])
    o.add_argument("--n", type=int)
    o.add_argument("--n-min", type=int)
    o.add_argument("--n-max", type=int)

    t = sub.add_parser("tree", parents=[common], help="tree transformations")
    t.add_argument("action", choices=["ascent"])
    t.add_argument("--input", required=True)
    t.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    return p


COMMANDS = {"compute": cmd_compute, "extremal": cmd_extremal, "oracle": cmd_oracle, "tree": cmd_tree}
TSV_COLUMNS = {
    "compute": ("graphs", ["line", "n", "m", "irr", "irr_t", "degree_sequence"]),
    "extremal": ("members", ["graph6", "mask", "degree_sequence", "irr_t"]),
    "oracle": ("per_n", ["n", "oracle_max", "closed_form", "match"]),
    "oracle census": ("per_n", ["n", "max_value", "closed_form", "class_count",
                                "family_subset_confirmed", "complement_closed", "match"]),
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.force = args.force or os.environ.get(oracle.GUARD_ENV) == "1"
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "emit")}
    start = time.perf_counter()
    try:
        results, verified = COMMANDS[args.command](args)
    except (InputError, IrrlabError) as exc:
        print(f"irrlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = round((time.perf_counter() - start) * 1000, 3)

    if args.emit == "tsv":
        target = f"{args.command} {getattr(args, 'target', '')}".strip()
        key, columns = TSV_COLUMNS.get(target, TSV_COLUMNS.get(args.command, (None, None)))
        if key is None or key not in results:
            print("irrlab: error: --emit tsv not supported for this command", file=sys.stderr)
            return EXIT_USAGE
        sys.stdout.write(_tsv(results[key], columns))
    else:
        run_report: dict[str, Any] = {
            "command": " ".join(x for x in (args.command, getattr(args, "action", None),
                                             getattr(args, "target", None)) if x),
            "parameters": params,
            "results": results,
            "elapsed_ms": elapsed,
        }
        if args.command == "oracle":
            run_report["verified"] = bool(verified)
        sys.stdout.write(json.dumps(run_report, sort_keys=True) + "\n")
    if args.command == "oracle" and not verified:
        return EXIT_FINDING
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
