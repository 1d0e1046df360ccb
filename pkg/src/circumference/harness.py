"""Orchestration: run checks over corpora, aggregate, and emit reports.

Reports are deterministic: graphs come out in corpus order whatever the
worker count, JSON is key-sorted, and nothing run-specific (timings, worker
counts, paths) is written into them.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing as mp
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable, Iterator, Sequence

import numpy as np
from numba import njit

from .corpus import CorpusItem, CorpusSpec, corpus_size, graph_from_mask, iter_corpus, pair_order
from .errors import CapacityError, SolverMismatchError
from .exact_solvers import SolveLimits, _subset_kernel
from .graph_core import to_graph6
from .spreading import DEFAULT_BUDGET
from .verification import CheckResult, lemma_checks, verify_theorem1, verify_theorem2

__all__ = [
    "SCHEMA",
    "LEVELS",
    "BoundReport",
    "verify_graph",
    "run_verify",
    "summarize",
    "render_report",
    "hunt",
    "HuntResult",
    "sweep_exhaustive_theorems",
]

SCHEMA = "circumference-report/1"
LEVELS = ("theorems", "lemmas", "claims", "all")
CONVENTIONS = {
    "empty_path_length": -1,
    "vertex_cycle_length": 1,
    "edge_cycle_length": 2,
    "c_bar_of_empty_remainder": 0,
    "degenerate_track": "circumference < 3; theorem outcomes reported, never counted as violations",
    "extreme_spreading": "read as saturated: no path end has a neighbour outside the spreading and H",
    "claim_a3_domain": "every u in U0_bar",
}


@dataclass
class BoundReport:
    graph_id: str
    index: int
    n: int
    m: int
    status: str = "processed"
    delta: int | None = None
    circumference: int | None = None
    degenerate: bool = False
    entries: list[dict] = field(default_factory=list)
    checks: dict[str, dict[str, int]] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    meta: dict = field(default_factory=dict)
    error: str | None = None
    partial_quantification: bool = False

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "index": self.index,
            "n": self.n,
            "m": self.m,
            "status": self.status,
            "delta": self.delta,
            "circumference": self.circumference,
            "degenerate": self.degenerate,
            "cycle_sets": self.entries,
            "checks": self.checks,
            "violations": self.violations,
            "meta": self.meta,
            "error": self.error,
            "partial_quantification": self.partial_quantification,
        }


def _tally(results: Iterable[CheckResult], checks: dict, violations: list, track: str = "") -> None:
    for r in results:
        name = r.name + track
        checks.setdefault(name, {})
        checks[name][r.status] = checks[name].get(r.status, 0) + 1
        if r.failed and not track:
            violations.append({"check": r.name, "witness": r.witness, "context": r.context})


def verify_graph(
    item: CorpusItem,
    level: str = "theorems",
    limits: SolveLimits | None = None,
    budget: int = DEFAULT_BUDGET,
    connected_only: bool = False,
    degenerate_track: bool = True,
    max_cycle_sets: int | None = None,
) -> BoundReport:
    """Run the checks selected by ``level`` on one graph."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    g = item.graph
    rep = BoundReport(to_graph6(g), item.index, g.n, g.num_edges, meta=dict(item.meta))
    if g.n == 0:
        rep.status, rep.error = "errored", "empty graph"
        return rep
    if connected_only and len(g.components()) > 1:
        rep.status = "filtered"
        return rep
    try:
        t1 = verify_theorem1(g, limits, allow_degenerate=True, max_sets=max_cycle_sets)
        t2 = verify_theorem2(g, limits, allow_degenerate=True, max_sets=max_cycle_sets)
    except CapacityError as e:
        rep.status, rep.error = "errored", f"capacity: {e}"
        return rep
    except SolverMismatchError as e:
        rep.status, rep.error = "errored", f"solver mismatch: {e}"
        rep.violations.append({"check": "solver_mismatch", "witness": {"message": str(e)}, "context": {}})
        return rep

    ctx = t1[0].context
    rep.delta, rep.circumference = ctx["delta"], ctx["circumference"]
    rep.degenerate = ctx["degenerate"]
    rep.partial_quantification = bool(ctx.get("partial"))
    if rep.degenerate:
        rep.status = "degenerate"
        if not degenerate_track:
            rep.status = "filtered"
            return rep
    for a, b in zip(t1, t2):
        ca, cb = a.context, b.context
        rep.entries.append({
            "vertex_set": ca["cycle_set"],
            "p_bar": ca["p_bar"],
            "c_bar": ca["c_bar"],
            "bound1": ca["bound"],
            "bound2": cb["bound"],
            "slack1": ca["slack"],
            "slack2": cb["slack"],
            "sharp1": ca["sharp"],
            "sharp2": cb["sharp"],
        })
    track = "_degenerate" if rep.degenerate else ""
    _tally(t1 + t2, rep.checks, rep.violations, track)

    if level != "theorems":
        try:
            _tally(lemma_checks(g, level, limits, budget), rep.checks, rep.violations)
        except CapacityError as e:
            rep.status, rep.error = "errored", f"capacity: {e}"
    return rep


def _verify_item(item: CorpusItem, **kw) -> BoundReport:
    return verify_graph(item, **kw)


def run_verify(
    corpus: CorpusSpec,
    level: str = "theorems",
    limits: SolveLimits | None = None,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
    max_cycle_sets: int | None = None,
) -> Iterator[BoundReport]:
    """Yield one :class:`BoundReport` per corpus graph, in corpus order."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    limits = limits or SolveLimits.from_env()
    fn = partial(_verify_item, level=level, limits=limits, budget=budget,
                 connected_only=corpus.connected_only, degenerate_track=corpus.degenerate_track,
                 max_cycle_sets=max_cycle_sets)
    items = iter_corpus(corpus)
    if jobs <= 1:
        for item in items:
            yield fn(item)
        return
    with mp.get_context("fork").Pool(jobs) as pool:
        yield from pool.imap(fn, items, chunksize=32)


def summarize(reports: Sequence[BoundReport], expected_size: int | None = None) -> dict:
    status = Counter(r.status for r in reports)
    checks: dict[str, Counter] = defaultdict(Counter)
    for r in reports:
        for name, counts in r.checks.items():
            checks[name].update(counts)
    main = [e for r in reports if r.status == "processed" for e in r.entries]
    slack1 = [e["slack1"] for e in main]
    slack2 = [e["slack2"] for e in main]
    out = {
        "total": len(reports),
        "processed": status["processed"],
        "degenerate": status["degenerate"],
        "filtered": status["filtered"],
        "errored": status["errored"],
        "skipped": status["degenerate"] + status["filtered"],
        "cycle_sets": len(main),
        "sharp1": sum(e["sharp1"] for e in main),
        "sharp2": sum(e["sharp2"] for e in main),
        "min_slack1": min(slack1, default=None),
        "max_slack1": max(slack1, default=None),
        "min_slack2": min(slack2, default=None),
        "max_slack2": max(slack2, default=None),
        "partial_quantification": sum(r.partial_quantification for r in reports),
        "violations": sum(len(r.violations) for r in reports),
        "checks": {k: dict(sorted(v.items())) for k, v in sorted(checks.items())},
    }
    if expected_size is not None:
        out["corpus_size"] = expected_size
    return out


def render_report(
    reports: Sequence[BoundReport],
    summary: dict,
    fmt: str = "json",
    corpus: CorpusSpec | Sequence[CorpusSpec] | None = None,
    level: str | None = None,
) -> str:
    if fmt == "json":
        if isinstance(corpus, CorpusSpec):
            corpus_desc = corpus.to_dict()
        else:
            corpus_desc = [c.to_dict() for c in corpus or ()]
        doc = {
            "schema": SCHEMA,
            "conventions": CONVENTIONS,
            "corpus": corpus_desc,
            "level": level,
            "reports": [r.to_dict() for r in reports],
            "summary": summary,
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph_id", "index", "n", "m", "delta", "circumference", "degenerate", "vertex_set",
                    "p_bar", "c_bar", "bound1", "bound2", "slack1", "slack2", "sharp1", "sharp2"])
        for r in reports:
            for e in r.entries:
                w.writerow([r.graph_id, r.index, r.n, r.m, r.delta, r.circumference, int(r.degenerate),
                            " ".join(map(str, e["vertex_set"])), e["p_bar"], e["c_bar"], e["bound1"],
                            e["bound2"], e["slack1"], e["slack2"], int(e["sharp1"]), int(e["sharp2"])])
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")


# hunting ---------------------------------------------------------------------------


@dataclass
class HuntResult:
    exit_status: int
    reports: list[BoundReport]
    summary: dict
    violations: list[dict]

    def report_text(self, corpora: Sequence[CorpusSpec], level: str) -> str:
        return render_report(self.reports, self.summary, "json", list(corpora), level)


def hunt(
    corpora: CorpusSpec | Sequence[CorpusSpec],
    level: str = "theorems",
    stop_on_violation: bool = False,
    jobs: int = 1,
    limits: SolveLimits | None = None,
    budget: int = DEFAULT_BUDGET,
    violations_path: str | None = None,
) -> HuntResult:
    """Search randomised corpora for violations; exit status 0 iff none were found."""
    if isinstance(corpora, CorpusSpec):
        corpora = [corpora]
    for c in corpora:
        if not c.randomized:
            raise ValueError(f"hunt takes randomised corpora only, not {c.kind!r}; use verify")
    reports: list[BoundReport] = []
    violations: list[dict] = []
    stopped = False
    for c in corpora:
        for rep in run_verify(c, level, limits, jobs, budget):
            reports.append(rep)
            for v in rep.violations:
                violations.append({
                    "graph6": rep.graph_id,
                    "corpus": c.to_dict(),
                    "seed": c.seed,
                    "index": rep.index,
                    "generator": f"numpy.random.default_rng([{c.seed}, {rep.index}])",
                    **v,
                })
            if rep.violations and stop_on_violation:
                stopped = True
                break
        if stopped:
            break
    summary = summarize(reports)
    summary["stopped_early"] = stopped
    if violations_path and violations:
        with open(violations_path, "w") as fh:
            for v in violations:
                fh.write(json.dumps(v, sort_keys=True) + "\n")
    return HuntResult(1 if violations else 0, reports, summary, violations)


# batched exhaustive theorem sweep ------------------------------------------------

_STATS = ("graphs", "main", "degenerate", "cycle_sets", "sharp1", "sharp2", "violations1", "violations2",
          "min_slack1", "min_slack2", "max_slack1", "max_slack2",
          "degenerate_sets", "degenerate_fail1", "degenerate_fail2")


@njit(cache=True)
def _exhaustive_kernel(n, lo, hi, pi, pj, stats, flagged):
    full = (1 << n) - 1
    nflag = 0
    adj = np.zeros(n, np.int64)
    for mask in range(lo, hi):
        for v in range(n):
            adj[v] = 0
        for k in range(len(pi)):
            if (mask >> k) & 1:
                adj[pi[k]] |= 1 << pj[k]
                adj[pj[k]] |= 1 << pi[k]
        ends, anchored, popcount, closed, pbest, cbest = _subset_kernel(adj, n)
        circ = np.int64(cbest[full])
        delta = n
        for v in range(n):
            d = np.int64(popcount[adj[v]])
            if d < delta:
                delta = d
        stats[0] += 1
        main = circ >= 3
        if main:
            stats[1] += 1
        else:
            stats[2] += 1
        bad = False
        for s in range(1, full + 1):
            if not closed[s] or popcount[s] != circ:
                continue
            rest = full & ~s
            pb = np.int64(pbest[rest])
            cb = np.int64(cbest[rest])
            sl1 = circ - (pb + 2) * (delta - pb)
            sl2 = circ - (cb + 1) * (delta - cb + 1)
            if main:
                stats[3] += 1
                if sl1 == 0:
                    stats[4] += 1
                if sl2 == 0:
                    stats[5] += 1
                if sl1 < 0:
                    stats[6] += 1
                    bad = True
                if sl2 < 0:
                    stats[7] += 1
                    bad = True
                stats[8] = min(stats[8], sl1)
                stats[9] = min(stats[9], sl2)
                stats[10] = max(stats[10], sl1)
                stats[11] = max(stats[11], sl2)
            else:
                stats[12] += 1
                if sl1 < 0:
                    stats[13] += 1
                if sl2 < 0:
                    stats[14] += 1
        if bad and nflag < len(flagged):
            flagged[nflag] = mask
            nflag += 1
    return nflag


def _sweep_chunk(args: tuple[int, int, int]) -> tuple[np.ndarray, list[int]]:
    n, lo, hi = args
    pairs = pair_order(n)
    pi = np.array([p[0] for p in pairs], np.int64)
    pj = np.array([p[1] for p in pairs], np.int64)
    stats = np.zeros(len(_STATS), np.int64)
    stats[8] = stats[9] = np.iinfo(np.int64).max
    stats[10] = stats[11] = np.iinfo(np.int64).min
    flagged = np.zeros(1024, np.int64)
    k = _exhaustive_kernel(n, lo, hi, pi, pj, stats, flagged)
    return stats, [int(x) for x in flagged[:k]]


def sweep_exhaustive_theorems(
    n: int, jobs: int = 1, limits: SolveLimits | None = None, chunk: int = 1 << 15
) -> dict:
    """Both theorems on all labelled graphs on ``n`` vertices, aggregated in compiled code.

    Graphs the kernel flags are re-run through :func:`verify_graph`, so every
    reported violation carries a full witness and oracle re-check.
    """
    total = 1 << (n * (n - 1) // 2)
    tasks = [(n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    if jobs <= 1:
        parts = map(_sweep_chunk, tasks)
    else:
        pool = mp.get_context("fork").Pool(jobs)
        parts = pool.imap(_sweep_chunk, tasks)
    agg = np.zeros(len(_STATS), np.int64)
    agg[8] = agg[9] = np.iinfo(np.int64).max
    agg[10] = agg[11] = np.iinfo(np.int64).min
    flagged: list[int] = []
    for stats, flags in parts:
        for i in range(len(_STATS)):
            if 8 <= i <= 9:
                agg[i] = min(agg[i], stats[i])
            elif 10 <= i <= 11:
                agg[i] = max(agg[i], stats[i])
            else:
                agg[i] += stats[i]
        flagged.extend(flags)
    if jobs > 1:
        pool.close()
        pool.join()
    out = {name: int(v) for name, v in zip(_STATS, agg)}
    if out["cycle_sets"] == 0:
        for k in ("min_slack1", "min_slack2", "max_slack1", "max_slack2"):
            out[k] = None
    out["corpus_size"] = total
    reports = [verify_graph(CorpusItem(m, graph_from_mask(n, m), {"edge_mask": m}), "theorems", limits)
               for m in flagged]
    out["violation_records"] = [
        {"graph6": r.graph_id, "edge_mask": r.index, **v} for r in reports for v in r.violations
    ]
    return out
