"""Exact longest paths and cycles by subset dynamic programming, plus DFS oracles.

The DP works on vertex subsets.  ``ends[S]`` is the bitmask of vertices ``v``
such that ``G[S]`` has a Hamilton path ending at ``v``; ``anchored[S]`` is the
same but restricted to paths that start at ``min(S)``, which lets every cycle
be counted once, from its smallest vertex.  From these the kernel derives, for
*every* subset ``U``, the longest path and longest cycle of ``G[U]``, so the
invariants of ``G - C`` for any vertex set ``C`` are table lookups.

Conventions: the empty graph has longest path -1 and longest cycle 0; a lone
vertex is a cycle of length 1 and an edge a cycle of length 2.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numba import njit

from .errors import CapacityError, DegenerateCircumferenceError
from .graph_core import Graph, bits

__all__ = [
    "SolveLimits",
    "SubsetTable",
    "subset_table",
    "longest_path_length",
    "longest_cycle_length",
    "all_longest_cycle_vertex_sets",
    "oracle_longest_path",
    "oracle_longest_cycle",
]

ENV_MAX_DP_N = "CIRCUMFERENCE_MAX_DP_N"
ENV_MAX_ORACLE_N = "CIRCUMFERENCE_MAX_ORACLE_N"


@dataclass(frozen=True)
class SolveLimits:
    max_dp_n: int = 22
    max_oracle_n: int = 10

    def __post_init__(self) -> None:
        if self.max_oracle_n > self.max_dp_n:
            raise ValueError("max_oracle_n must not exceed max_dp_n")
        if self.max_dp_n > 30:
            raise ValueError("max_dp_n above 30 does not fit the DP tables")

    @classmethod
    def from_env(cls) -> SolveLimits:
        dp = int(os.environ.get(ENV_MAX_DP_N, cls.max_dp_n))
        oracle = int(os.environ.get(ENV_MAX_ORACLE_N, min(cls.max_oracle_n, dp)))
        return cls(dp, oracle)


def _limits(limits: SolveLimits | None) -> SolveLimits:
    return limits if limits is not None else SolveLimits.from_env()


@njit(cache=True)
def _subset_kernel(adj, n):
    size = 1 << n
    ends = np.zeros(size, np.int64)
    anchored = np.zeros(size, np.int64)
    for v in range(n):
        ends[1 << v] = 1 << v
        anchored[1 << v] = 1 << v
    for s in range(1, size):
        e = ends[s]
        if e != 0:
            for v in range(n):
                if (e >> v) & 1:
                    nb = adj[v] & ~s
                    while nb != 0:
                        low = nb & -nb
                        ends[s | low] |= low
                        nb ^= low
        a = anchored[s]
        if a != 0:
            lows = s & -s
            above = ~((lows << 1) - 1)
            for v in range(n):
                if (a >> v) & 1:
                    nb = adj[v] & ~s & above
                    while nb != 0:
                        low = nb & -nb
                        anchored[s | low] |= low
                        nb ^= low

    popcount = np.zeros(size, np.int8)
    closed = np.zeros(size, np.bool_)
    pbest = np.full(size, -1, np.int8)
    cbest = np.zeros(size, np.int8)
    for s in range(1, size):
        k = popcount[s >> 1] + (s & 1)
        popcount[s] = k
        if ends[s] != 0:
            pbest[s] = k - 1
        if k <= 2:
            # single vertices always close; pairs close iff they are an edge
            closed[s] = ends[s] != 0
        else:
            v0 = 0
            while not (s >> v0) & 1:
                v0 += 1
            closed[s] = (anchored[s] & adj[v0]) != 0
        if closed[s]:
            cbest[s] = k
    for i in range(n):
        bit = 1 << i
        for s in range(size):
            if s & bit:
                t = s ^ bit
                if pbest[t] > pbest[s]:
                    pbest[s] = pbest[t]
                if cbest[t] > cbest[s]:
                    cbest[s] = cbest[t]
    return ends, anchored, popcount, closed, pbest, cbest


class SubsetTable:
    """Longest path/cycle of every induced subgraph of one graph.

    Masks passed to the query methods are vertex bitmasks of the host graph.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.n = g.n
        adj = np.array(g.adj, dtype=np.int64) if g.n else np.zeros(0, np.int64)
        (self.ends, self.anchored, self.popcount, self.closed,
         self.pbest, self.cbest) = _subset_kernel(adj, g.n)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def longest_path(self, mask: int | None = None) -> int:
        return int(self.pbest[self.full if mask is None else mask])

    def longest_cycle(self, mask: int | None = None) -> int:
        return int(self.cbest[self.full if mask is None else mask])

    def _within(self, mask: int) -> np.ndarray:
        idx = np.arange(1 << self.n, dtype=np.int64)
        return (idx & ~np.int64(mask)) == 0

    def cycle_sets(self, length: int, mask: int | None = None) -> list[int]:
        """Masks ``T`` inside ``mask`` whose induced subgraph has a cycle through all of ``T``.

        ``length`` follows the degenerate conventions, so 1 lists vertices and 2 lists edges.
        """
        sel = self.closed & (self.popcount == length)
        if mask is not None and mask != self.full:
            sel &= self._within(mask)
        return [int(t) for t in np.flatnonzero(sel)]

    def path_sets(self, length: int, mask: int | None = None) -> list[int]:
        """Masks ``T`` inside ``mask`` spanned by a path of the given length."""
        if length < 0:
            return []
        sel = (self.ends != 0) & (self.popcount == length + 1)
        if mask is not None and mask != self.full:
            sel &= self._within(mask)
        return [int(t) for t in np.flatnonzero(sel)]

    def hamilton_path(self, mask: int) -> tuple[int, ...]:
        """One path through exactly the vertices of ``mask``."""
        if mask == 0:
            return ()
        e = int(self.ends[mask])
        if e == 0:
            raise ValueError("no Hamilton path on this vertex set")
        v = (e & -e).bit_length() - 1
        seq = [v]
        rest = mask ^ (1 << v)
        while rest:
            cand = int(self.ends[rest]) & self.graph.adj[v]
            v = (cand & -cand).bit_length() - 1
            seq.append(v)
            rest ^= 1 << v
        return tuple(reversed(seq))

    def hamilton_cycle(self, mask: int) -> tuple[int, ...]:
        """One cyclic ordering of ``mask`` (size 1 and 2 use the degenerate conventions)."""
        if not self.closed[mask]:
            raise ValueError("no Hamilton cycle on this vertex set")
        if int(self.popcount[mask]) <= 2:
            return tuple(bits(mask))
        start = (mask & -mask).bit_length() - 1
        cand = int(self.anchored[mask]) & self.graph.adj[start]
        v = (cand & -cand).bit_length() - 1
        seq = [v]
        rest = mask ^ (1 << v)
        while rest != 1 << start:
            cand = int(self.anchored[rest]) & self.graph.adj[v]
            v = (cand & -cand).bit_length() - 1
            seq.append(v)
            rest ^= 1 << v
        seq.append(start)
        return tuple(reversed(seq))


@lru_cache(maxsize=256)
def _cached_table(g: Graph) -> SubsetTable:
    return SubsetTable(g)


def subset_table(g: Graph, limits: SolveLimits | None = None) -> SubsetTable:
    lim = _limits(limits)
    if g.n > lim.max_dp_n:
        raise CapacityError(f"n={g.n} exceeds max_dp_n={lim.max_dp_n}")
    if g.n <= 16:
        return _cached_table(g)
    return SubsetTable(g)


def _component_tables(g: Graph, limits: SolveLimits | None):
    lim = _limits(limits)
    for comp in g.components():
        size = comp.bit_count()
        if size > lim.max_dp_n:
            raise CapacityError(f"component of size {size} exceeds max_dp_n={lim.max_dp_n}")
        sub, back = g.induced_mask(comp)
        yield subset_table(sub, lim), back


def longest_path_length(g: Graph, limits: SolveLimits | None = None) -> int:
    """Length (edges) of a longest path; -1 for the empty graph."""
    return max((t.longest_path() for t, _ in _component_tables(g, limits)), default=-1)


def longest_cycle_length(g: Graph, limits: SolveLimits | None = None) -> int:
    """Circumference with lone vertices and edges counted as cycles of length 1 and 2."""
    return max((t.longest_cycle() for t, _ in _component_tables(g, limits)), default=0)


def all_longest_cycle_vertex_sets(g: Graph, limits: SolveLimits | None = None) -> list[frozenset[int]]:
    """Distinct vertex sets of the longest cycles, sorted; requires circumference >= 3."""
    tables = list(_component_tables(g, limits))
    circ = max((t.longest_cycle() for t, _ in tables), default=0)
    if circ < 3:
        raise DegenerateCircumferenceError(f"circumference {circ} < 3")
    found = []
    for t, back in tables:
        if t.longest_cycle() == circ:
            for s in t.cycle_sets(circ):
                found.append(frozenset(back[v] for v in bits(s)))
    return sorted(found, key=sorted)


# Oracles --------------------------------------------------------------------
# Plain DFS over simple paths; deliberately independent of the subset DP.


def _check_oracle(g: Graph, limits: SolveLimits | None) -> None:
    lim = _limits(limits)
    if g.n > lim.max_oracle_n:
        raise CapacityError(f"n={g.n} exceeds max_oracle_n={lim.max_oracle_n}")


def oracle_longest_path(g: Graph, limits: SolveLimits | None = None) -> int:
    _check_oracle(g, limits)
    if g.n == 0:
        return -1
    nbrs = [g.neighbors(v) for v in range(g.n)]
    best = 0
    target = g.n - 1

    def dfs(v: int, visited: set[int], length: int) -> bool:
        nonlocal best
        if length > best:
            best = length
            if best == target:
                return True
        for w in nbrs[v]:
            if w not in visited:
                visited.add(w)
                if dfs(w, visited, length + 1):
                    return True
                visited.discard(w)
        return False

    for s in range(g.n):
        if dfs(s, {s}, 0):
            break
    return best


def oracle_longest_cycle(g: Graph, limits: SolveLimits | None = None) -> int:
    _check_oracle(g, limits)
    if g.n == 0:
        return 0
    nbrs = [g.neighbors(v) for v in range(g.n)]
    best = 2 if any(nbrs) else 1

    def dfs(start: int, v: int, visited: set[int], count: int) -> bool:
        nonlocal best
        if count >= 3 and start in nbrs[v] and count > best:
            best = count
            if best == g.n:
                return True
        for w in nbrs[v]:
            if w > start and w not in visited:
                visited.add(w)
                if dfs(start, w, visited, count + 1):
                    return True
                visited.discard(w)
        return False

    for s in range(g.n):
        if dfs(s, s, {s}, 1):
            break
    return best
