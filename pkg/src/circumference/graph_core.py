"""Simple undirected graphs on dense integer ids, oriented paths/cycles, and I/O.

Adjacency is stored as one Python ``int`` bitmask per vertex, so neighbourhood
intersections are single ``&`` operations.  Paths and cycles follow the
length conventions used throughout the package: the empty path has length
-1, a single vertex is a cycle of length 1 and an edge a cycle of length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import EdgeListError, Graph6Error

__all__ = [
    "Graph",
    "PathSeq",
    "CycleSeq",
    "remove_vertices",
    "min_degree",
    "segment_length",
    "parse_graph6",
    "to_graph6",
    "parse_edgelist",
    "to_edgelist",
    "bits",
    "mask_of",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one bitmask per vertex")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield u, v

    def induced_mask(self, mask: int) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on the vertices of ``mask``, relabelled densely."""
        keep = list(bits(mask & self.full_mask))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            a = 0
            for u in bits(self.adj[v] & mask):
                a |= 1 << index[u]
            adj.append(a)
        return Graph(len(keep), tuple(adj)), tuple(keep)

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def remove_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``G - S`` and the map from its vertex ids back to ids of ``g``."""
    removed = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        removed |= 1 << v
    return g.induced_mask(g.full_mask & ~removed)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def _check_vertices(g: Graph | None, vertices: Sequence[int]) -> None:
    if len(set(vertices)) != len(vertices):
        raise ValueError(f"repeated vertex in {list(vertices)}")
    if g is not None:
        for v in vertices:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range for n={g.n}")


@dataclass(frozen=True)
class PathSeq:
    """An oriented path given by its vertex sequence (possibly empty)."""

    graph: Graph | None = field(compare=False, repr=False)
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        _check_vertices(self.graph, self.vertices)
        if self.graph is not None:
            for a, b in zip(self.vertices, self.vertices[1:]):
                if not self.graph.has_edge(a, b):
                    raise ValueError(f"{a} and {b} are consecutive on the path but not adjacent")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def succ(self, u: int) -> int:
        i = self.vertices.index(u)
        if i == len(self.vertices) - 1:
            raise ValueError(f"{u} is the last vertex and has no successor")
        return self.vertices[i + 1]

    def pred(self, u: int) -> int:
        i = self.vertices.index(u)
        if i == 0:
            raise ValueError(f"{u} is the first vertex and has no predecessor")
        return self.vertices[i - 1]

    def segment(self, u: int, v: int) -> tuple[int, ...]:
        """Vertices from ``u`` to ``v``; reversed when ``v`` precedes ``u``."""
        i, j = self.vertices.index(u), self.vertices.index(v)
        if i <= j:
            return self.vertices[i : j + 1]
        return self.vertices[j : i + 1][::-1]


@dataclass(frozen=True)
class CycleSeq:
    """A cyclically ordered vertex sequence; 1 and 2 vertices are degenerate cycles."""

    graph: Graph | None = field(compare=False, repr=False)
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("a cycle has at least one vertex")
        _check_vertices(self.graph, self.vertices)
        g = self.graph
        if g is None:
            return
        k = len(self.vertices)
        if k == 2 and not g.has_edge(*self.vertices):
            raise ValueError("a 2-vertex cycle must be an edge")
        if k >= 3:
            for i, a in enumerate(self.vertices):
                b = self.vertices[(i + 1) % k]
                if not g.has_edge(a, b):
                    raise ValueError(f"{a} and {b} are consecutive on the cycle but not adjacent")

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def succ(self, u: int) -> int:
        i = self.vertices.index(u)
        return self.vertices[(i + 1) % len(self.vertices)]

    def pred(self, u: int) -> int:
        i = self.vertices.index(u)
        return self.vertices[i - 1]

    def segment(self, u: int, v: int) -> tuple[int, ...]:
        """Vertices met walking from ``u`` to ``v`` along the orientation."""
        k = len(self.vertices)
        i, j = self.vertices.index(u), self.vertices.index(v)
        steps = (j - i) % k
        return tuple(self.vertices[(i + s) % k] for s in range(steps + 1))

    def as_path(self) -> PathSeq:
        return PathSeq(self.graph, self.vertices)


def segment_length(c: CycleSeq, u: int, v: int) -> int:
    """Number of edges walked from ``u`` to ``v`` along ``c``; zero when ``u == v``."""
    if len(c) < 3:
        raise ValueError("segment lengths are defined on cycles with at least 3 vertices")
    for x in (u, v):
        if x not in c.vertices:
            raise ValueError(f"vertex {x} is not on the cycle")
    return (c.vertices.index(v) - c.vertices.index(u)) % len(c)


# graph6 ---------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    out = [_encode_size(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (aj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line.  An optional ``>>graph6<<`` header and line end are ignored."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
        base = len(_G6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 input", base)
    vals = []
    for k, ch in enumerate(s):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"byte {ch!r} outside the graph6 range 63..126", base + k)
        vals.append(o - 63)

    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte size header", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte size header", base + len(vals))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4

    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} adjacency bytes, found {len(body)}", base + len(vals))
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency data", base + pos + need)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if k % 6 and body[-1] & ((1 << (6 - k % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Graph(n, tuple(adj))


# edge lists -------------------------------------------------------------------

_N_DIRECTIVE = re.compile(r"#\s*n\s*=\s*(\d+)\s*$")


def parse_edgelist(text: str) -> Graph:
    """Parse ``u v`` lines (0-based).  ``#`` starts a comment; ``# n=<count>`` fixes the vertex count."""
    edges = []
    declared = None
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        m = _N_DIRECTIVE.match(line)
        if m:
            declared = int(m.group(1))
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise EdgeListError(f"line {lineno}: negative vertex id")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
        top = max(top, u, v)
    n = top + 1 if declared is None else declared
    if top >= n:
        raise EdgeListError(f"vertex {top} exceeds declared count n={n}")
    return Graph.from_edges(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
