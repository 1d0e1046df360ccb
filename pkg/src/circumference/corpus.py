"""Graph corpora: exhaustive labelled graphs, G(n, p), random regular, the extremal family, files.

Randomised corpora draw graph ``i`` from ``numpy.random.default_rng([seed, i])``,
so any single graph can be regenerated from ``(seed, i)`` alone and the
output does not depend on how work is split across processes.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterator

import numpy as np

from .errors import CapacityError
from .extremal import ExtremalParams, build_extremal
from .graph_core import Graph, parse_edgelist, parse_graph6

__all__ = ["CorpusSpec", "CorpusItem", "iter_corpus", "corpus_size", "graph_from_mask", "pair_order",
           "gnp_graph", "regular_graph"]

KINDS = ("exhaustive", "gnp", "regular", "extremal", "file")
RANDOM_KINDS = ("gnp", "regular")


@dataclass(frozen=True)
class CorpusSpec:
    kind: str
    n: int | None = None
    p: float | None = None
    d: int | None = None
    count: int | None = None
    seed: int | None = None
    kappa_range: tuple[int, int] | None = None
    delta_range: tuple[int, int] | None = None
    path: str | None = None
    fmt: str | None = None
    connected_only: bool = False
    degenerate_track: bool = True

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown corpus kind {self.kind!r}; expected one of {KINDS}")
        need = {
            "exhaustive": ("n",),
            "gnp": ("n", "p", "count", "seed"),
            "regular": ("n", "d", "count", "seed"),
            "extremal": ("kappa_range", "delta_range"),
            "file": ("path",),
        }[self.kind]
        missing = [f for f in need if getattr(self, f) is None]
        if missing:
            raise ValueError(f"{self.kind} corpus needs {', '.join(missing)}")
        if self.kind == "regular" and self.n * self.d % 2:
            raise ValueError("n * d must be even for a regular graph")

    @classmethod
    def exhaustive(cls, n: int, **kw) -> CorpusSpec:
        return cls("exhaustive", n=n, **kw)

    @classmethod
    def gnp(cls, n: int, p: float, count: int, seed: int, **kw) -> CorpusSpec:
        return cls("gnp", n=n, p=p, count=count, seed=seed, **kw)

    @classmethod
    def regular(cls, n: int, d: int, count: int, seed: int, **kw) -> CorpusSpec:
        return cls("regular", n=n, d=d, count=count, seed=seed, **kw)

    @classmethod
    def extremal(cls, kappa_range: tuple[int, int], delta_range: tuple[int, int], **kw) -> CorpusSpec:
        return cls("extremal", kappa_range=tuple(kappa_range), delta_range=tuple(delta_range), **kw)

    @classmethod
    def file(cls, path: str, fmt: str | None = None, **kw) -> CorpusSpec:
        return cls("file", path=str(path), fmt=fmt, **kw)

    @property
    def randomized(self) -> bool:
        return self.kind in RANDOM_KINDS

    def to_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(self).items() if v is not None}


@dataclass(frozen=True)
class CorpusItem:
    index: int
    graph: Graph
    meta: dict


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    """Labelled graph whose edge ``k`` (graph6 order) is present iff bit ``k`` of ``mask`` is set."""
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def gnp_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    pairs = pair_order(n)
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def regular_graph(n: int, d: int, rng: np.random.Generator, max_tries: int = 100_000) -> Graph:
    """Uniform ``d``-regular graph by the pairing model, rejecting loops and multi-edges."""
    if n * d % 2:
        raise ValueError("n * d must be even")
    if not 0 <= d < n:
        raise ValueError("need 0 <= d < n")
    stubs = np.repeat(np.arange(n), d)
    for _ in range(max_tries):
        perm = rng.permutation(stubs)
        a, b = perm[0::2], perm[1::2]
        if np.any(a == b):
            continue
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        keys = lo * n + hi
        if len(np.unique(keys)) != len(keys):
            continue
        return Graph.from_edges(n, zip(lo.tolist(), hi.tolist()))
    raise CapacityError(f"pairing model found no simple {d}-regular graph on {n} vertices in {max_tries} tries")


def corpus_size(spec: CorpusSpec) -> int | None:
    if spec.kind == "exhaustive":
        return 1 << (spec.n * (spec.n - 1) // 2)
    if spec.randomized:
        return spec.count
    return None


def _extremal_params(spec: CorpusSpec) -> Iterator[ExtremalParams]:
    klo, khi = spec.kappa_range
    dlo, dhi = spec.delta_range
    for k in range(max(klo, 1), khi + 1):
        for d in range(max(dlo, k), dhi + 1):
            yield ExtremalParams(k, d)


def _file_graphs(spec: CorpusSpec) -> Iterator[tuple[Graph, dict]]:
    path = Path(spec.path)
    text = path.read_text()
    fmt = spec.fmt or ("graph6" if path.suffix in (".g6", ".graph6") else "edgelist")
    if fmt == "graph6":
        for lineno, line in enumerate(text.splitlines(), 1):
            if line.strip():
                yield parse_graph6(line.strip()), {"line": lineno}
    elif fmt == "edgelist":
        yield parse_edgelist(text), {}
    else:
        raise ValueError(f"unknown file format {fmt!r}")


def iter_corpus(spec: CorpusSpec) -> Iterator[CorpusItem]:
    if spec.kind == "exhaustive":
        for mask in range(1 << (spec.n * (spec.n - 1) // 2)):
            yield CorpusItem(mask, graph_from_mask(spec.n, mask), {"edge_mask": mask})
    elif spec.kind == "gnp":
        for i in range(spec.count):
            rng = np.random.default_rng([spec.seed, i])
            yield CorpusItem(i, gnp_graph(spec.n, spec.p, rng), {"seed": spec.seed, "index": i})
    elif spec.kind == "regular":
        for i in range(spec.count):
            rng = np.random.default_rng([spec.seed, i])
            yield CorpusItem(i, regular_graph(spec.n, spec.d, rng), {"seed": spec.seed, "index": i})
    elif spec.kind == "extremal":
        for i, p in enumerate(_extremal_params(spec)):
            yield CorpusItem(i, build_extremal(p), {"kappa": p.kappa, "delta": p.delta})
    else:
        for i, (g, meta) in enumerate(_file_graphs(spec)):
            yield CorpusItem(i, g, meta)

