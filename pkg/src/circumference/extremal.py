"""The sharpness family: kappa + 1 disjoint cliques ``K_{delta-kappa+1}`` joined to a ``K_kappa``.

Vertex layout: hubs (the ``K_kappa``) are ``0..kappa-1``; clique ``j`` occupies
the next block of ``delta - kappa + 1`` ids.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .graph_core import Graph

__all__ = ["ExtremalParams", "ExtremalPrediction", "build_extremal", "predicted_invariants", "parameter_grid"]


@dataclass(frozen=True)
class ExtremalParams:
    kappa: int
    delta: int

    def __post_init__(self) -> None:
        if self.kappa < 1:
            raise ValueError(f"kappa must be at least 1, got {self.kappa}")
        if self.delta < self.kappa:
            raise ValueError(f"delta={self.delta} must be at least kappa={self.kappa}")

    @property
    def clique_size(self) -> int:
        return self.delta - self.kappa + 1

    @property
    def n(self) -> int:
        return (self.kappa + 1) * self.clique_size + self.kappa


@dataclass(frozen=True)
class ExtremalPrediction:
    n: int
    delta: int
    circumference: int
    p_bar: int
    c_bar: int
    bound1: int
    bound2: int

    def to_dict(self) -> dict:
        return asdict(self)


def build_extremal(p: ExtremalParams) -> Graph:
    k, s = p.kappa, p.clique_size
    edges = []
    for a in range(k):
        edges += [(a, b) for b in range(a + 1, p.n)]
    for j in range(k + 1):
        base = k + j * s
        edges += [(base + x, base + y) for x in range(s) for y in range(x + 1, s)]
    return Graph.from_edges(p.n, edges)


def predicted_invariants(p: ExtremalParams) -> ExtremalPrediction:
    """Closed-form values; a longest cycle threads all hubs through kappa of the cliques."""
    k, d = p.kappa, p.delta
    p_bar = d - k
    c_bar = d - k + 1
    return ExtremalPrediction(
        n=p.n,
        delta=d,
        circumference=k * (d - k + 2),
        p_bar=p_bar,
        c_bar=c_bar,
        bound1=(p_bar + 2) * (d - p_bar),
        bound2=(c_bar + 1) * (d - c_bar + 1),
    )


def parameter_grid(max_n: int, kappas: range | None = None, deltas: range | None = None) -> list[ExtremalParams]:
    """All valid (kappa, delta) with predicted vertex count at most ``max_n``."""
    out = []
    for k in kappas if kappas is not None else range(1, max_n + 1):
        for d in deltas if deltas is not None else range(k, max_n + 1):
            if d < k:
                continue
            p = ExtremalParams(k, d)
            if p.n <= max_n:
                out.append(p)
    return out
