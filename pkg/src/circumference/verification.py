"""Executable checks of the circumference bounds and the inequalities behind them.

Every checker certifies its hypotheses first (longest cycle/path via the
exact solver, minimality via matching or enumeration).  Uncertifiable input
raises :class:`HypothesisError`; only certified instances can *fail*.

Bounds checked, with ``C`` a longest cycle, ``delta`` the minimum degree and
``p_bar``/``c_bar`` the longest path/cycle lengths of ``G - C``::

    |C| >= (p_bar + 2) * (delta - p_bar)
    |C| >= (c_bar + 1) * (delta - c_bar + 1)

``c_bar`` is 0 when ``G - C`` is empty (``p_bar`` is then -1), which makes
both bounds collapse to ``delta + 1`` on Hamiltonian graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DegenerateCircumferenceError, HypothesisError, SolverMismatchError
from .exact_solvers import (
    SolveLimits,
    _limits,
    oracle_longest_cycle,
    oracle_longest_path,
    subset_table,
)
from .graph_core import CycleSeq, Graph, PathSeq, bits, mask_of, min_degree, remove_vertices, segment_length
from .spreading import (
    DEFAULT_BUDGET,
    Spreading,
    SpreadingClassification,
    classify,
    enumerate_spreadings,
    min_u0_via_matching,
    saturate,
)

__all__ = [
    "CheckResult",
    "Lemma1Config",
    "check_lemma1",
    "check_lemma1_segments",
    "check_lemma1_identities",
    "check_lemma2",
    "check_lemma3",
    "check_spreading_properties",
    "check_proof_claims",
    "verify_theorem1",
    "verify_theorem2",
    "theorem_rows",
    "lemma_checks",
]

PASS, FAIL, NA = "pass", "fail", "not_applicable"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    witness: dict | None = None
    context: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status not in (PASS, FAIL, NA):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and not self.witness:
            raise ValueError("a failed check must carry a witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": self.status, "context": self.context}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def _result(name: str, witness: dict | None, context: dict | None = None) -> CheckResult:
    return CheckResult(name, FAIL if witness else PASS, witness or None, context or {})


# certification helpers ---------------------------------------------------------


def _remainder(g: Graph, removed: int, limits: SolveLimits | None) -> tuple[int, int]:
    t = subset_table(g, limits)
    rest = t.full & ~removed
    return t.longest_path(rest), t.longest_cycle(rest)


def _certify_cycle_of(g: Graph, c: CycleSeq, limits) -> None:
    CycleSeq(g, c.vertices)
    circ = subset_table(g, limits).longest_cycle()
    if c.length != circ:
        raise HypothesisError(f"cycle of length {c.length} is not longest (circumference {circ})")


def _certify_host(g: Graph, hmask: int, m: PathSeq | CycleSeq, limits) -> None:
    (CycleSeq if isinstance(m, CycleSeq) else PathSeq)(g, m.vertices)
    if m.mask & hmask:
        raise HypothesisError("host meets the removed set")
    p_bar, c_bar = _remainder(g, hmask, limits)
    want = c_bar if isinstance(m, CycleSeq) else p_bar
    if m.length != want:
        kind = "cycle" if isinstance(m, CycleSeq) else "path"
        raise HypothesisError(f"host {kind} has length {m.length}, longest in G-H is {want}")


def _certify_spreading(g: Graph, hmask: int, m: PathSeq | CycleSeq, s: Spreading) -> None:
    if s.graph != g or mask_of(s.removed) != hmask:
        raise HypothesisError("spreading belongs to a different graph or removed set")
    if set(s.roots) != set(m.vertices) or s.cyclic != isinstance(m, CycleSeq):
        raise HypothesisError("spreading is not rooted on the host")
    low = min_u0_via_matching(g, s.removed, m)
    if s.trivial_count() != low:
        raise HypothesisError(f"spreading has |U0|={s.trivial_count()}, minimum is {low}")


@lru_cache(maxsize=4096)
def _min_ustar(g: Graph, removed: frozenset[int], roots: tuple[int, ...], cyclic: bool, budget: int) -> int:
    best = None
    low = None
    for s in enumerate_spreadings(g, removed, roots, budget, cyclic):
        t = s.trivial_count()
        if low is None or t < low:
            low, best = t, len(classify(s).u_star)
        elif t == low:
            best = min(best, len(classify(s).u_star))
    return best


def _certify_ustar_minimal(s: Spreading, budget: int) -> None:
    want = _min_ustar(s.graph, s.removed, s.roots, s.cyclic, budget)
    got = len(classify(s).u_star)
    if got != want:
        raise HypothesisError(f"spreading has |U*|={got}, minimum over the U0-minimal fiber is {want}")


# attack points of paths hanging off a longest cycle ------------------------------


@dataclass(frozen=True)
class Lemma1Config:
    """A longest cycle ``C``, a path ``M`` off it, and disjoint paths ``v_i .. w_i`` hanging from ``M``."""

    cycle: CycleSeq
    m: PathSeq
    rooted_paths: tuple[PathSeq, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rooted_paths", tuple(self.rooted_paths))
        g = self.cycle.graph
        if g is None:
            raise ValueError("the cycle must carry its host graph")
        cmask = self.cycle.mask
        if self.m.mask & cmask:
            raise ValueError("M must lie in G - C")
        PathSeq(g, self.m.vertices)
        used = 0
        for lp in self.rooted_paths:
            PathSeq(g, lp.vertices)
            if not lp.vertices:
                raise ValueError("rooted paths are non-empty")
            if lp.mask & cmask:
                raise ValueError("rooted paths must lie in G - C")
            if lp.mask & used:
                raise ValueError("rooted paths must be pairwise disjoint")
            if lp.mask & self.m.mask != 1 << lp.vertices[0]:
                raise ValueError(f"path {lp.vertices} must meet M exactly in its first vertex")
            used |= lp.mask

    @property
    def graph(self) -> Graph:
        return self.cycle.graph

    @property
    def ends(self) -> tuple[int, ...]:
        return tuple(lp.vertices[-1] for lp in self.rooted_paths)

    @cached_property
    def z(self) -> tuple[frozenset[int], ...]:
        cmask = self.cycle.mask
        return tuple(frozenset(bits(self.graph.adj[w] & cmask)) for w in self.ends)

    @cached_property
    def attack(self) -> tuple[int, ...]:
        union = set().union(*self.z) if self.z else set()
        return tuple(v for v in self.cycle.vertices if v in union)

    @cached_property
    def f_sets(self) -> tuple[frozenset[int], ...]:
        wmask = mask_of(self.ends)
        return tuple(frozenset(bits(self.graph.adj[x] & wmask)) for x in self.attack)

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        a = self.attack
        t = len(a)
        if t < 2:
            return ()
        return tuple(segment_length(self.cycle, a[i], a[(i + 1) % t]) for i in range(t))

    def to_dict(self) -> dict:
        return {
            "cycle": list(self.cycle.vertices),
            "m": list(self.m.vertices),
            "rooted_paths": [list(lp.vertices) for lp in self.rooted_paths],
        }


def check_lemma1(g: Graph, cfg: Lemma1Config, limits: SolveLimits | None = None) -> CheckResult:
    """|C| >= sum |Z_i| + |union Z_i| where ``Z_i`` are the cycle neighbours of the path ends."""
    if cfg.graph != g:
        raise HypothesisError("configuration belongs to a different graph")
    _certify_cycle_of(g, cfg.cycle, limits)
    total = sum(len(z) for z in cfg.z)
    t = len(cfg.attack)
    bound = total + t
    ctx = {"cycle_length": cfg.cycle.length, "bound": bound, "slack": cfg.cycle.length - bound}
    witness = None
    if cfg.cycle.length < bound:
        witness = {"config": cfg.to_dict(), "Z": [sorted(z) for z in cfg.z], "bound": bound}
    return _result("lemma1", witness, ctx)


def check_lemma1_segments(g: Graph, cfg: Lemma1Config, limits: SolveLimits | None = None) -> CheckResult:
    """Every gap between consecutive attack points satisfies 2 f >= |F_i| + |F_i+1| + 2."""
    if cfg.graph != g:
        raise HypothesisError("configuration belongs to a different graph")
    _certify_cycle_of(g, cfg.cycle, limits)
    t = len(cfg.attack)
    if t < 2:
        return CheckResult("lemma1_segments", NA, None, {"t": t})
    f, F = cfg.gaps, cfg.f_sets
    for i in range(t):
        j = (i + 1) % t
        if 2 * f[i] < len(F[i]) + len(F[j]) + 2:
            return _result("lemma1_segments", {
                "config": cfg.to_dict(), "i": i, "xi": [cfg.attack[i], cfg.attack[j]],
                "gap": f[i], "F_i": sorted(F[i]), "F_next": sorted(F[j]),
            }, {"t": t})
    return _result("lemma1_segments", None, {"t": t})


def check_lemma1_identities(cfg: Lemma1Config) -> CheckResult:
    """Gaps sum to |C| and sum |F_i| = sum |Z_i| (only meaningful for t >= 2)."""
    t = len(cfg.attack)
    if t < 2:
        return CheckResult("lemma1_identities", NA, None, {"t": t})
    gap_sum = sum(cfg.gaps)
    f_sum = sum(len(x) for x in cfg.f_sets)
    z_sum = sum(len(z) for z in cfg.z)
    witness = None
    if gap_sum != cfg.cycle.length or f_sum != z_sum:
        witness = {"config": cfg.to_dict(), "gap_sum": gap_sum, "f_sum": f_sum, "z_sum": z_sum}
    return _result("lemma1_identities", witness, {"t": t})


# endpoint neighbourhood bounds for minimal spreadings ----------------------------


def _spread_context(s: Spreading, cls: SpreadingClassification) -> dict:
    return {"spreading": s.to_dict(), "classification": cls.to_dict()}


def check_lemma2(
    g: Graph, h: Iterable[int], m: CycleSeq, s: Spreading, limits: SolveLimits | None = None
) -> CheckResult:
    """For a longest cycle M of G - H and a (U0)-minimal spreading: |M| >= phi_u + b_u + 1 on U1."""
    hmask = mask_of(h)
    if not isinstance(m, CycleSeq):
        raise HypothesisError("the cycle-host bound needs a cycle host")
    _certify_host(g, hmask, m, limits)
    _certify_spreading(g, hmask, m, s)
    cls = classify(s)
    for u in sorted(cls.u1):
        if m.length < len(cls.phi[u]) + len(cls.b[u]) + 1:
            return _result("lemma2", {
                "u": u, "host_length": m.length, "phi": sorted(cls.phi[u]), "B": sorted(cls.b[u]),
                **_spread_context(s, cls),
            })
    return _result("lemma2", None, {"checked": len(cls.u1)})


def check_lemma3(
    g: Graph, h: Iterable[int], l: PathSeq, s: Spreading, limits: SolveLimits | None = None
) -> CheckResult:
    """For a longest path L of G - H and a (U0)-minimal spreading: |L| >= phi_u + b_u off U0."""
    hmask = mask_of(h)
    if not isinstance(l, PathSeq):
        raise HypothesisError("the path-host bound needs a path host")
    _certify_host(g, hmask, l, limits)
    _certify_spreading(g, hmask, l, s)
    cls = classify(s)
    for u in sorted(cls.u0_bar):
        if l.length < len(cls.phi[u]) + len(cls.b[u]):
            return _result("lemma3", {
                "u": u, "host_length": l.length, "phi": sorted(cls.phi[u]), "B": sorted(cls.b[u]),
                **_spread_context(s, cls),
            })
    return _result("lemma3", None, {"checked": len(cls.u0_bar)})


# structural properties of minimal spreadings ------------------------------------


def _generic_properties(s: Spreading, cls: SpreadingClassification, containment_name: str) -> list[CheckResult]:
    g = s.graph
    out = []

    # a trivial root never reaches past the second vertex of another root's path
    witness = None
    for u in sorted(cls.u0):
        for v in sorted(cls.u0_bar):
            hit = cls.phi[u] & set(s.path(v))
            if not hit <= {v, s.dot(v)}:
                witness = {"u": u, "v": v, "hit": sorted(hit), "path_v": list(s.path(v))}
                break
        if witness:
            break
    out.append(_result(containment_name, witness and {**witness, "spreading": s.to_dict()}))

    # paths of length >= 2 end away from trivial roots
    witness = None
    for u in s.roots:
        if len(s.path(u)) >= 3 and cls.phi[u] & cls.u0:
            witness = {"u": u, "path_u": list(s.path(u)), "hit": sorted(cls.phi[u] & cls.u0),
                       "spreading": s.to_dict()}
            break
    out.append(_result("claim2", witness))

    lhs = sum(len(cls.b_star[u]) for u in cls.u0)
    rhs = sum(len(cls.b[u]) for u in cls.u0_bar)
    out.append(_result("double_counting", {"sum_b_star": lhs, "sum_b": rhs, "spreading": s.to_dict()}
                       if lhs != rhs else None))

    if saturate(s) is not s:
        out.append(CheckResult("saturation_identity", NA))
    else:
        witness = None
        for u in s.roots:
            if g.degree(s.end(u)) != len(cls.phi[u]) + len(cls.psi[u]):
                witness = {"u": u, "end": s.end(u), "degree": g.degree(s.end(u)),
                           "phi": len(cls.phi[u]), "psi": len(cls.psi[u]), "spreading": s.to_dict()}
                break
        out.append(_result("saturation_identity", witness))
    return out


def check_spreading_properties(
    g: Graph, h: Iterable[int], m: PathSeq | CycleSeq, s: Spreading, limits: SolveLimits | None = None
) -> list[CheckResult]:
    """Containment, length-2 endpoint property, double counting and (when saturated) the degree split.

    Requires ``m`` longest in ``G - H`` and ``s`` (U0)-minimal.
    """
    hmask = mask_of(h)
    _certify_host(g, hmask, m, limits)
    _certify_spreading(g, hmask, m, s)
    return _generic_properties(s, classify(s), "containment")


def check_proof_claims(
    g: Graph,
    c: CycleSeq,
    m: PathSeq | CycleSeq,
    s: Spreading,
    mode: str,
    saturated_from: Spreading | None = None,
    limits: SolveLimits | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[CheckResult]:
    """Claims a1-a3 (``mode="path"``) or b1-b6 (``mode="cycle"``) plus the generic properties.

    In cycle mode the spreading must be (U0, U*)-minimal, or be the saturation
    of ``saturated_from`` which is.
    """
    if mode not in ("path", "cycle"):
        raise ValueError(f"mode must be 'path' or 'cycle', not {mode!r}")
    if (mode == "cycle") != isinstance(m, CycleSeq):
        raise HypothesisError(f"{mode} mode needs a {'cycle' if mode == 'cycle' else 'path'} host")
    _certify_cycle_of(g, c, limits)
    hmask = c.mask
    _certify_host(g, hmask, m, limits)
    _certify_spreading(g, hmask, m, s)
    if mode == "cycle":
        if saturated_from is not None:
            _certify_spreading(g, hmask, m, saturated_from)
            if saturate(saturated_from) != s:
                raise HypothesisError("spreading is not the saturation of saturated_from")
            _certify_ustar_minimal(saturated_from, budget)
        else:
            _certify_ustar_minimal(s, budget)

    cls = classify(s)
    size = m.length
    phi = {u: len(cls.phi[u]) for u in s.roots}
    b = {u: len(cls.b[u]) for u in s.roots}
    b_star = {u: len(cls.b_star[u]) for u in cls.u0}
    prefix = "a" if mode == "path" else "b"
    results = _generic_properties(s, cls, prefix + "1")

    def first(name: str, domain: Iterable[int], ok) -> CheckResult:
        for u in sorted(domain):
            if not ok(u):
                return _result(name, {"u": u, "phi": phi[u], "b": b[u], "b_star": b_star.get(u),
                                      "host_length": size, **_spread_context(s, cls)})
        return _result(name, None)

    # roots other than u number |V(M)| - 1
    others = len(s.roots) - 1
    results.append(first(prefix + "2", cls.u0, lambda u: phi[u] <= others + b_star[u]))
    if mode == "path":
        results.append(first("a3", cls.u0_bar, lambda u: phi[u] <= size - b[u]))
    else:
        # halves are kept integral by doubling both sides
        results.append(first("b3", cls.u1, lambda u: phi[u] <= size - 1 - b[u]))
        results.append(first("b4", cls.u_star, lambda u: 2 * phi[u] <= 2 * (size - 1 - b[u]) + 2 * phi[u] - size))
        results.append(first("b5", cls.u1 | cls.u_star1, lambda u: phi[u] <= size - 1 - b[u]))
        top = max((phi[u] for u in cls.u_star2), default=0)
        results.append(first("b6", cls.u_star2, lambda u: 2 * phi[u] <= 2 * (size - 1 - b[u]) + 2 * top - size))
        partition = cls.u_star1 | cls.u_star2 == cls.u_star and not cls.u_star1 & cls.u_star2
        results.append(_result("ustar_partition", None if partition else {
            "U_star": sorted(cls.u_star), "U_star1": sorted(cls.u_star1), "U_star2": sorted(cls.u_star2)}))
    return results


# the two circumference bounds ------------------------------------------------------


@dataclass(frozen=True)
class TheoremRow:
    cycle_set: frozenset[int]
    circumference: int
    delta: int
    p_bar: int
    c_bar: int

    @property
    def bound1(self) -> int:
        return (self.p_bar + 2) * (self.delta - self.p_bar)

    @property
    def bound2(self) -> int:
        return (self.c_bar + 1) * (self.delta - self.c_bar + 1)


def theorem_rows(g: Graph, limits: SolveLimits | None = None, max_sets: int | None = None) -> tuple[int, list[TheoremRow]]:
    """Circumference and one row per longest-cycle vertex set (vertices/edges when degenerate)."""
    if g.n == 0:
        raise ValueError("theorems need a non-empty graph")
    t = subset_table(g, limits)
    circ = t.longest_cycle()
    delta = min_degree(g)
    rows = []
    for s in t.cycle_sets(circ):
        rest = t.full & ~s
        rows.append(TheoremRow(frozenset(bits(s)), circ, delta, t.longest_path(rest), t.longest_cycle(rest)))
        if max_sets is not None and len(rows) >= max_sets:
            break
    return circ, rows


def _oracle_recheck(g: Graph, row: TheoremRow, which: int, limits) -> bool | None:
    lim = _limits(limits)
    if g.n > lim.max_oracle_n:
        return None
    rest, _ = remove_vertices(g, row.cycle_set)
    circ = oracle_longest_cycle(g, lim)
    value = oracle_longest_path(rest, lim) if which == 1 else oracle_longest_cycle(rest, lim)
    expected = row.p_bar if which == 1 else row.c_bar
    if circ != row.circumference or value != expected:
        raise SolverMismatchError(
            f"DP gave circumference {row.circumference} and {expected}, oracle gave {circ} and {value}")
    return True


def _verify_theorem(g: Graph, which: int, limits, allow_degenerate: bool, max_sets: int | None) -> list[CheckResult]:
    circ, rows = theorem_rows(g, limits, max_sets)
    partial = max_sets is not None and len(rows) >= max_sets
    degenerate = circ < 3
    if degenerate and not allow_degenerate:
        raise DegenerateCircumferenceError(f"circumference {circ} < 3")
    out = []
    for row in rows:
        bound = row.bound1 if which == 1 else row.bound2
        slack = circ - bound
        ctx = {
            "cycle_set": sorted(row.cycle_set), "circumference": circ, "delta": row.delta,
            "p_bar": row.p_bar, "c_bar": row.c_bar, "bound": bound, "slack": slack,
            "sharp": slack == 0, "degenerate": degenerate, "partial": partial,
        }
        witness = None
        if slack < 0:
            ctx["oracle_confirmed"] = _oracle_recheck(g, row, which, limits)
            witness = {"cycle_set": sorted(row.cycle_set), "bound": bound, "circumference": circ}
        out.append(_result(f"theorem{which}", witness, ctx))
    return out


def verify_theorem1(
    g: Graph, limits: SolveLimits | None = None, allow_degenerate: bool = False, max_sets: int | None = None
) -> list[CheckResult]:
    """|C| >= (p_bar + 2)(delta - p_bar) for every longest-cycle vertex set."""
    return _verify_theorem(g, 1, limits, allow_degenerate, max_sets)


def verify_theorem2(
    g: Graph, limits: SolveLimits | None = None, allow_degenerate: bool = False, max_sets: int | None = None
) -> list[CheckResult]:
    """|C| >= (c_bar + 1)(delta - c_bar + 1) for every longest-cycle vertex set."""
    return _verify_theorem(g, 2, limits, allow_degenerate, max_sets)


# instance generation for the lemma/claim sweeps ---------------------------------


def _root_subsets(roots: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    k = len(roots)
    if k <= 4:
        for r in range(1, k + 1):
            yield from combinations(roots, r)
    else:
        for u in roots:
            yield (u,)
        yield roots


def _lemma1_checks(g: Graph, c: CycleSeq, m: PathSeq, spreads: list[Spreading], limits) -> list[CheckResult]:
    out = []
    for s in spreads:
        for sub in _root_subsets(s.roots):
            chosen = set(sub)
            if any(len(s.path(u)) > 1 for u in s.roots if u not in chosen):
                continue  # counted under the smaller root set
            cfg = Lemma1Config(c, m, tuple(PathSeq(g, s.path(u)) for u in sub))
            out.append(check_lemma1(g, cfg, limits))
            out.append(check_lemma1_segments(g, cfg, limits))
            out.append(check_lemma1_identities(cfg))
    return out


def _with_saturation(s: Spreading) -> list[Spreading]:
    x = saturate(s)
    return [s] if x is s else [s, x]


def _min_fiber(spreads: list[Spreading]) -> list[Spreading]:
    low = min(s.trivial_count() for s in spreads)
    return [s for s in spreads if s.trivial_count() == low]


def _ustar_fiber(spreads: list[Spreading]) -> list[Spreading]:
    sizes = [len(classify(s).u_star) for s in spreads]
    low = min(sizes)
    return [s for s, z in zip(spreads, sizes) if z == low]


def lemma_checks(
    g: Graph,
    level: str = "all",
    limits: SolveLimits | None = None,
    budget: int = DEFAULT_BUDGET,
    extra_removed: Iterable[int] = (),
) -> list[CheckResult]:
    """Generate certified hypothesis instances from ``g`` and run the lemma and/or claim checks.

    ``level`` is ``"lemmas"``, ``"claims"`` or ``"all"``.  Instances:

    * for each longest-cycle vertex set ``C`` (circumference >= 3): every path of
      ``G - C`` with all its spreadings and sub-families (attack-point bounds); every longest
      path and longest cycle of ``G - C`` with their minimal spreadings
      (neighbourhood bounds, claims);
    * ``H`` empty, and each mask in ``extra_removed``: longest paths and cycles of
      ``G - H`` with their (U0)-minimal spreadings (neighbourhood bounds, generic properties).
    """
    do_lemmas = level in ("lemmas", "all")
    do_claims = level in ("claims", "all")
    t = subset_table(g, limits)
    full = t.full
    out: list[CheckResult] = []

    def hosts(rest: int):
        if rest == 0:
            return
        p_bar = t.longest_path(rest)
        for ps in t.path_sets(p_bar, rest):
            yield PathSeq(g, t.hamilton_path(ps))
        c_bar = t.longest_cycle(rest)
        for cs in t.cycle_sets(c_bar, rest):
            yield CycleSeq(g, t.hamilton_cycle(cs))

    def lemma23(hset: frozenset[int], m, spreads: list[Spreading]) -> None:
        for s in _min_fiber(spreads):
            for x in _with_saturation(s):
                if do_lemmas:
                    if isinstance(m, CycleSeq):
                        out.append(check_lemma2(g, hset, m, x, limits))
                    else:
                        out.append(check_lemma3(g, hset, m, x, limits))
                if do_claims:
                    out.extend(check_spreading_properties(g, hset, m, x, limits))

    circ = t.longest_cycle()
    if circ >= 3:
        for cmask in t.cycle_sets(circ):
            c = CycleSeq(g, t.hamilton_cycle(cmask))
            hset = frozenset(bits(cmask))
            rest = full & ~cmask
            if do_lemmas:
                for length in range(0, t.longest_path(rest) + 1):
                    for ps in t.path_sets(length, rest):
                        m = PathSeq(g, t.hamilton_path(ps))
                        spreads = list(enumerate_spreadings(g, hset, m, budget))
                        out.extend(_lemma1_checks(g, c, m, spreads, limits))
            for m in hosts(rest):
                spreads = list(enumerate_spreadings(g, hset, m, budget))
                lemma23(hset, m, spreads)
                if not do_claims:
                    continue
                if isinstance(m, PathSeq):
                    for s in _min_fiber(spreads):
                        for x in _with_saturation(s):
                            out.extend(check_proof_claims(g, c, m, x, "path", limits=limits, budget=budget))
                else:
                    for s in _ustar_fiber(_min_fiber(spreads)):
                        out.extend(check_proof_claims(g, c, m, s, "cycle", limits=limits, budget=budget))
                        x = saturate(s)
                        if x is not s:
                            out.extend(check_proof_claims(g, c, m, x, "cycle", saturated_from=s,
                                                          limits=limits, budget=budget))

    for hmask in (0, *extra_removed):
        hset = frozenset(bits(hmask))
        for m in hosts(full & ~hmask):
            lemma23(hset, m, list(enumerate_spreadings(g, hset, m, budget)))
    return out
