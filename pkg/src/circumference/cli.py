"""Command-line entry point: ``circumference <subcommand> ...``.

Exit status: 0 clean, 1 check violations, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Sequence

from .corpus import CorpusSpec, corpus_size, graph_from_mask
from .errors import CapacityError, EdgeListError, Graph6Error
from .exact_solvers import SolveLimits, subset_table
from .extremal import ExtremalParams, build_extremal, predicted_invariants
from .graph_core import CycleSeq, Graph, PathSeq, min_degree, parse_edgelist, parse_graph6, to_edgelist, to_graph6
from .harness import LEVELS, hunt, render_report, run_verify, summarize, sweep_exhaustive_theorems
from .spreading import DEFAULT_BUDGET, classify, find_minimal_spreadings, saturate

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def load_graph(arg: str, fmt: str | None = None) -> Graph:
    """Read a graph from a file path, ``-`` (stdin) or an inline graph6 string."""
    if arg == "-":
        text = sys.stdin.read()
    elif Path(arg).is_file():
        text = Path(arg).read_text()
        if fmt is None and Path(arg).suffix in (".g6", ".graph6"):
            fmt = "graph6"
    else:
        return parse_graph6(arg)
    if fmt is None:
        first = next((ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
        fmt = "edgelist" if " " in first.strip() or "\t" in first.strip() else "graph6"
    if fmt == "graph6":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise Graph6Error("expected exactly one graph6 line", 0)
        return parse_graph6(lines[0])
    return parse_edgelist(text)


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(x) for x in text.replace(",", " ").split()]


def _range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi or lo)


def _limits(args) -> SolveLimits:
    lim = SolveLimits.from_env()
    if args.max_dp_n is not None:
        lim = replace(lim, max_dp_n=args.max_dp_n)
    if args.max_oracle_n is not None:
        lim = replace(lim, max_oracle_n=args.max_oracle_n)
    return lim


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# subcommands ---------------------------------------------------------------------


def cmd_solve(args) -> int:
    g = load_graph(args.graph, args.input_format)
    t = subset_table(g, _limits(args))
    circ = t.longest_cycle()
    out = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.num_edges,
        "delta": min_degree(g) if g.n else None,
        "longest_path": t.longest_path(),
        "circumference": circ,
        "degenerate": circ < 3,
        "cycle_sets": [],
    }
    if g.n:
        out["longest_cycle"] = t.hamilton_cycle(next(iter(t.cycle_sets(circ))))
    for s in t.cycle_sets(circ):
        rest = t.full & ~s
        out["cycle_sets"].append({
            "vertex_set": sorted(v for v in range(g.n) if s >> v & 1),
            "p_bar": t.longest_path(rest),
            "c_bar": t.longest_cycle(rest),
        })
    _emit(_dump(out), None)
    return EXIT_OK


def _corpus_from_args(args) -> CorpusSpec:
    kw = {"connected_only": args.connected_only, "degenerate_track": not args.no_degenerate_track}
    kind = args.corpus
    if kind == "exhaustive":
        return CorpusSpec.exhaustive(args.n, **kw)
    if kind == "gnp":
        return CorpusSpec.gnp(args.n, args.p, args.count, args.seed, **kw)
    if kind == "regular":
        return CorpusSpec.regular(args.n, args.d, args.count, args.seed, **kw)
    if kind == "extremal":
        return CorpusSpec.extremal(_range(args.kappa), _range(args.delta), **kw)
    return CorpusSpec.file(args.path, args.input_format, **kw)


def cmd_verify(args) -> int:
    corpus = _corpus_from_args(args)
    if args.fast:
        if corpus.kind != "exhaustive" or args.level != "theorems":
            raise ValueError("--fast applies to exhaustive corpora at level theorems")
        summary = sweep_exhaustive_theorems(corpus.n, args.jobs, _limits(args))
        _emit(_dump(summary), args.output)
        return EXIT_VIOLATION if summary["violation_records"] else EXIT_OK
    reports = list(run_verify(corpus, args.level, _limits(args), args.jobs, args.budget, args.max_cycle_sets))
    summary = summarize(reports, corpus_size(corpus))
    if args.summary_only:
        _emit(_dump(summary), args.output)
    else:
        _emit(render_report(reports, summary, args.format, corpus, args.level), args.output)
    return EXIT_VIOLATION if summary["violations"] else EXIT_OK


def cmd_hunt(args) -> int:
    if args.kind == "gnp":
        corpus = CorpusSpec.gnp(args.n, args.p, args.count, args.seed)
    else:
        corpus = CorpusSpec.regular(args.n, args.d, args.count, args.seed)
    res = hunt(corpus, args.level, args.stop_on_violation, args.jobs, _limits(args), args.budget,
               args.violations_out)
    if args.output:
        Path(args.output).write_text(res.report_text([corpus], args.level))
    sys.stdout.write(_dump(res.summary))
    return res.exit_status


def cmd_extremal(args) -> int:
    p = ExtremalParams(args.kappa, args.delta)
    g = build_extremal(p)
    if args.emit:
        _emit(to_graph6(g) + "\n" if args.format == "graph6" else to_edgelist(g), None)
        return EXIT_OK
    pred = predicted_invariants(p)
    t = subset_table(g, _limits(args))
    circ = t.longest_cycle()
    rows = [(t.longest_path(t.full & ~s), t.longest_cycle(t.full & ~s)) for s in t.cycle_sets(circ)]
    out = {
        "kappa": p.kappa,
        "delta": p.delta,
        "graph6": to_graph6(g),
        "predicted": pred.to_dict(),
        "measured": {"n": g.n, "delta": min_degree(g), "circumference": circ,
                     "p_bar": sorted({r[0] for r in rows}), "c_bar": sorted({r[1] for r in rows}),
                     "cycle_sets": len(rows)},
    }
    out["sharp"] = (circ == pred.circumference == pred.bound1 == pred.bound2
                    and all(r == (pred.p_bar, pred.c_bar) for r in rows))
    _emit(_dump(out), None)
    return EXIT_OK if out["sharp"] else EXIT_VIOLATION


def cmd_spread(args) -> int:
    g = load_graph(args.graph, args.input_format)
    removed = _ints(args.remove)
    if args.host_path is not None:
        host = PathSeq(g, _ints(args.host_path))
    else:
        host = CycleSeq(g, _ints(args.host_cycle))
    spreads = find_minimal_spreadings(g, removed, host, args.order, args.budget)
    items = []
    for s in spreads:
        if args.saturate:
            s = saturate(s)
        items.append({"spreading": s.to_dict(), "classification": classify(s).to_dict()})
    _emit(_dump({"order": args.order, "count": len(items), "spreadings": items}), None)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    out = sys.stdout
    for mask in range(1 << (args.n * (args.n - 1) // 2)):
        g = graph_from_mask(args.n, mask)
        if args.connected_only and len(g.components()) > 1:
            continue
        out.write(to_graph6(g) + "\n")
    return EXIT_OK


# parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-dp-n", type=int, default=None, help="largest n for the subset DP")
    common.add_argument("--max-oracle-n", type=int, default=None, help="largest n for the brute-force oracle")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = argparse.ArgumentParser(prog="circumference", description="Exact longest-cycle bounds toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="exact invariants of one graph")
    s.add_argument("graph", help="graph6 string, file path, or - for stdin")
    s.add_argument("--input-format", choices=("graph6", "edgelist"))
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", parents=[common], help="check bounds over a corpus")
    v.add_argument("--corpus", choices=("exhaustive", "gnp", "regular", "extremal", "file"), default="exhaustive")
    v.add_argument("--n", type=int)
    v.add_argument("--p", type=float)
    v.add_argument("--d", type=int)
    v.add_argument("--count", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--kappa", default="1:3", help="range lo:hi")
    v.add_argument("--delta", default="1:5", help="range lo:hi")
    v.add_argument("--path")
    v.add_argument("--input-format", choices=("graph6", "edgelist"))
    v.add_argument("--level", choices=LEVELS, default="theorems")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--output")
    v.add_argument("--summary-only", action="store_true")
    v.add_argument("--connected-only", action="store_true")
    v.add_argument("--no-degenerate-track", action="store_true")
    v.add_argument("--max-cycle-sets", type=int)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    v.add_argument("--fast", action="store_true", help="compiled sweep (exhaustive, theorems only)")
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("hunt", parents=[common], help="randomised violation search")
    h.add_argument("--kind", choices=("gnp", "regular"), default="gnp")
    h.add_argument("--n", type=int, default=12)
    h.add_argument("--p", type=float, default=0.3)
    h.add_argument("--d", type=int, default=3)
    h.add_argument("--count", type=int, default=1000)
    h.add_argument("--seed", type=int, default=0)
    h.add_argument("--level", choices=LEVELS, default="theorems")
    h.add_argument("--stop-on-violation", action="store_true")
    h.add_argument("--violations-out")
    h.add_argument("--output")
    h.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    h.set_defaults(func=cmd_hunt)

    e = sub.add_parser("extremal", parents=[common], help="sharpness family member")
    e.add_argument("--kappa", type=int, required=True)
    e.add_argument("--delta", type=int, required=True)
    e.add_argument("--emit", action="store_true", help="print the graph instead of invariants")
    e.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    e.set_defaults(func=cmd_extremal)

    sp = sub.add_parser("spread", parents=[common], help="minimal spreadings over a host")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--input-format", choices=("graph6", "edgelist"))
    sp.add_argument("--remove", default="", help="comma-separated removed vertices")
    host = sp.add_mutually_exclusive_group(required=True)
    host.add_argument("--host-path")
    host.add_argument("--host-cycle")
    sp.add_argument("--order", choices=("U0", "U0_then_Ustar"), default="U0")
    sp.add_argument("--saturate", action="store_true")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_spread)

    en = sub.add_parser("enumerate", parents=[common], help="stream all labelled graphs as graph6")
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--connected-only", action="store_true")
    en.set_defaults(func=cmd_enumerate)
    return p


_REQUIRED = {
    "exhaustive": ("n",),
    "gnp": ("n", "p", "count", "seed"),
    "regular": ("n", "d", "count", "seed"),
    "extremal": (),
    "file": ("path",),
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.command == "verify":
        missing = [f"--{f}" for f in _REQUIRED[args.corpus] if getattr(args, f) is None]
        if missing:
            parser.print_usage(sys.stderr)
            print(f"verify --corpus {args.corpus} needs {' '.join(missing)}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except (Graph6Error, EdgeListError, ValueError, CapacityError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
