"""Spreadings: families of disjoint paths rooted at the vertices of a host path or cycle.

Given a graph ``G``, a removed vertex set ``H`` and a host ``M`` (a path or
cycle of ``G - H``), a spreading assigns to every root ``u`` on ``M`` a path
``u .. end(u)`` in ``G - H``; the paths are pairwise vertex-disjoint, so each
meets ``M`` only in its root.  ``dot(u)`` is the second vertex of a
non-trivial path.  Classification splits the roots into

* ``U0``  - trivial paths (``end(u) == u``),
* ``U*``  - non-trivial paths whose endpoint sees only its own path inside the spreading,
* ``U1``  - everything else,

together with the neighbourhood sets ``Phi`` (endpoint neighbours inside the
spreading), ``Psi`` (endpoint neighbours inside ``H``), ``B`` and ``B*``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import CapacityError
from .graph_core import CycleSeq, Graph, PathSeq, bits, mask_of

__all__ = [
    "DEFAULT_BUDGET",
    "Spreading",
    "SpreadingClassification",
    "enumerate_spreadings",
    "min_u0_via_matching",
    "find_minimal_spreadings",
    "saturate",
    "classify",
]

DEFAULT_BUDGET = 10**6

Host = PathSeq | CycleSeq


def _host(m: Host | Sequence[int], cyclic: bool | None = None) -> tuple[tuple[int, ...], bool]:
    if isinstance(m, CycleSeq):
        return m.vertices, True
    if isinstance(m, PathSeq):
        return m.vertices, False
    return tuple(m), bool(cyclic)


@dataclass(frozen=True)
class Spreading:
    graph: Graph = field(compare=False, repr=False)
    removed: frozenset[int]
    roots: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    cyclic: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "removed", frozenset(self.removed))
        if len(self.paths) != len(self.roots):
            raise ValueError("one path per root is required")
        g = self.graph
        seen = 0
        hmask = mask_of(self.removed)
        for root, path in zip(self.roots, self.paths):
            if not path or path[0] != root:
                raise ValueError(f"path {path} does not start at its root {root}")
            for a, b in zip(path, path[1:]):
                if not g.has_edge(a, b):
                    raise ValueError(f"{a}-{b} is not an edge")
            pm = mask_of(path)
            if pm.bit_count() != len(path):
                raise ValueError(f"path {path} repeats a vertex")
            if pm & seen:
                raise ValueError("spreading paths must be pairwise disjoint")
            if pm & hmask:
                raise ValueError(f"path {path} meets the removed set")
            seen |= pm

    @cached_property
    def _index(self) -> dict[int, int]:
        return {u: i for i, u in enumerate(self.roots)}

    @cached_property
    def vertex_mask(self) -> int:
        return mask_of(v for p in self.paths for v in p)

    @property
    def host_length(self) -> int:
        """|M| under the package conventions (cycle: vertex count, path: vertex count - 1)."""
        return len(self.roots) if self.cyclic else len(self.roots) - 1

    def path(self, u: int) -> tuple[int, ...]:
        return self.paths[self._index[u]]

    def end(self, u: int) -> int:
        return self.path(u)[-1]

    def dot(self, u: int) -> int | None:
        p = self.path(u)
        return p[1] if len(p) > 1 else None

    def trivial_count(self) -> int:
        return sum(len(p) == 1 for p in self.paths)

    def to_dict(self) -> dict:
        return {
            "removed": sorted(self.removed),
            "roots": list(self.roots),
            "cyclic_host": self.cyclic,
            "paths": {str(u): list(p) for u, p in zip(self.roots, self.paths)},
        }


@dataclass(frozen=True)
class SpreadingClassification:
    u0: frozenset[int]
    u0_bar: frozenset[int]
    u_star: frozenset[int]
    u1: frozenset[int]
    phi: Mapping[int, frozenset[int]]
    psi: Mapping[int, frozenset[int]]
    b: Mapping[int, frozenset[int]]
    b_star: Mapping[int, frozenset[int]]
    u_star1: frozenset[int] | None = None
    u_star2: frozenset[int] | None = None

    def to_dict(self) -> dict:
        def sets(d):
            return {str(k): sorted(v) for k, v in sorted(d.items())}

        out = {
            "U0": sorted(self.u0),
            "U0_bar": sorted(self.u0_bar),
            "U_star": sorted(self.u_star),
            "U1": sorted(self.u1),
            "Phi": sets(self.phi),
            "Psi": sets(self.psi),
            "B": sets(self.b),
            "B_star": sets(self.b_star),
        }
        if self.u_star1 is not None:
            out["U_star1"] = sorted(self.u_star1)
            out["U_star2"] = sorted(self.u_star2)
        return out


def classify(s: Spreading) -> SpreadingClassification:
    g = s.graph
    vmask = s.vertex_mask
    hmask = mask_of(s.removed)
    phi, psi = {}, {}
    for u in s.roots:
        e = s.end(u)
        phi[u] = frozenset(bits(g.adj[e] & vmask))
        psi[u] = frozenset(bits(g.adj[e] & hmask))
    u0 = frozenset(u for u in s.roots if len(s.path(u)) == 1)
    u0_bar = frozenset(s.roots) - u0
    u_star = frozenset(u for u in u0_bar if phi[u] <= set(s.path(u)))
    u1 = u0_bar - u_star
    u0_mask = mask_of(u0)

    b = {}
    for u in s.roots:
        d = s.dot(u)
        b[u] = frozenset() if d is None else frozenset(bits(g.adj[d] & u0_mask))
    b_star = {u: frozenset(v for v in u0_bar if g.has_edge(u, s.dot(v))) for u in u0}

    u_star1 = u_star2 = None
    if s.cyclic:
        c = s.host_length
        u_star1 = frozenset(u for u in u_star if 2 * len(phi[u]) <= c)
        u_star2 = frozenset(u for u in u_star if 2 * len(phi[u]) >= c + 1)
    return SpreadingClassification(u0, u0_bar, u_star, u1, phi, psi, b, b_star, u_star1, u_star2)


def enumerate_spreadings(
    g: Graph,
    h: Iterable[int],
    m: Host | Sequence[int],
    budget: int = DEFAULT_BUDGET,
    cyclic: bool | None = None,
) -> Iterator[Spreading]:
    """Yield every spreading over ``m`` in ``G - h`` exactly once.

    Roots are processed in host order and each root's path is grown in
    increasing vertex order, trivial path first, so the all-trivial spreading
    comes out first.  ``budget`` caps the number of path prefixes explored.
    """
    roots, cyc = _host(m, cyclic)
    removed = frozenset(h)
    hmask = mask_of(removed)
    rmask = mask_of(roots)
    if hmask & rmask:
        raise ValueError("host vertices must avoid the removed set")
    avail = g.full_mask & ~hmask & ~rmask
    k = len(roots)
    explored = 0
    current: list[tuple[int, ...]] = [()] * k

    def grow(path: list[int], used: int) -> Iterator[tuple[tuple[int, ...], int]]:
        nonlocal explored
        explored += 1
        if explored > budget:
            raise CapacityError(f"spreading enumeration exceeded budget {budget}", partial=explored)
        yield tuple(path), used
        for w in bits(g.adj[path[-1]] & avail & ~used):
            path.append(w)
            yield from grow(path, used | 1 << w)
            path.pop()

    def rec(i: int, used: int) -> Iterator[Spreading]:
        if i == k:
            yield Spreading(g, removed, roots, tuple(current), cyc)
            return
        for p, used2 in grow([roots[i]], used):
            current[i] = p
            yield from rec(i + 1, used2)

    yield from rec(0, 0)


def min_u0_via_matching(g: Graph, h: Iterable[int], m: Host | Sequence[int]) -> int:
    """Minimum |U0| over all spreadings, via a maximum matching of first edges.

    Cutting every non-trivial path after its first edge keeps U0 unchanged, so
    the minimum is |V(M)| minus a maximum matching between the roots and the
    free vertices of ``G - h - V(M)``.
    """
    roots, _ = _host(m)
    hmask = mask_of(h)
    avail = g.full_mask & ~hmask & ~mask_of(roots)
    owner: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in bits(g.adj[u] & avail):
            if w in seen:
                continue
            seen.add(w)
            if w not in owner or augment(owner[w], seen):
                owner[w] = u
                return True
        return False

    matched = sum(augment(u, set()) for u in roots)
    return len(roots) - matched


def find_minimal_spreadings(
    g: Graph,
    h: Iterable[int],
    m: Host | Sequence[int],
    order: str = "U0",
    budget: int = DEFAULT_BUDGET,
) -> list[Spreading]:
    """All (U0)-minimal spreadings, or with ``order="U0_then_Ustar"`` the (U0, U*)-minimal ones."""
    if order not in ("U0", "U0_then_Ustar"):
        raise ValueError(f"unknown minimality order {order!r}")
    best: list[Spreading] = []
    low = None
    for s in enumerate_spreadings(g, h, m, budget):
        t = s.trivial_count()
        if low is None or t < low:
            low, best = t, [s]
        elif t == low:
            best.append(s)
    if order == "U0":
        return best
    sizes = [len(classify(s).u_star) for s in best]
    lo = min(sizes)
    return [s for s, z in zip(best, sizes) if z == lo]


def saturate(s: Spreading) -> Spreading:
    """Extend path endpoints into unused vertices of ``G - H`` until none has such a neighbour.

    The first root in host order whose endpoint can grow is extended by its
    smallest free neighbour, and the scan restarts, so the result is deterministic.
    """
    g = s.graph
    paths = [list(p) for p in s.paths]
    used = s.vertex_mask | mask_of(s.removed)
    grown = True
    while grown:
        grown = False
        for p in paths:
            free = g.adj[p[-1]] & ~used
            if free:
                w = (free & -free).bit_length() - 1
                p.append(w)
                used |= 1 << w
                grown = True
                break
    if not any(len(p) != len(q) for p, q in zip(paths, s.paths)):
        return s
    return Spreading(g, s.removed, s.roots, tuple(tuple(p) for p in paths), s.cyclic)
