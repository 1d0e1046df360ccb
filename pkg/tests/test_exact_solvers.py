from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _graphs import BOWTIE, K13, complete_graph, cycle_graph, graphs, path_graph, petersen, to_nx
from circumference.corpus import gnp_graph
from circumference.errors import CapacityError, DegenerateCircumferenceError
from circumference.exact_solvers import (
    SolveLimits,
    all_longest_cycle_vertex_sets,
    longest_cycle_length,
    longest_path_length,
    oracle_longest_cycle,
    oracle_longest_path,
    subset_table,
)
from circumference.graph_core import CycleSeq, Graph, PathSeq, remove_vertices


def nx_longest_cycle(g: Graph) -> int:
    """Reference value built on networkx cycle enumeration plus the 1/2 conventions."""
    if g.n == 0:
        return 0
    h = to_nx(g)
    best = max((len(c) for c in nx.simple_cycles(h)), default=0)
    if best >= 3:
        return best
    return 2 if g.num_edges else 1


def nx_longest_path(g: Graph) -> int:
    if g.n == 0:
        return -1
    h = to_nx(g)
    best = 0
    for a, b in combinations(range(g.n), 2):
        for p in nx.all_simple_paths(h, a, b):
            best = max(best, len(p) - 1)
    return best


class TestConventions:
    def test_empty_graph(self):
        assert longest_path_length(Graph.empty(0)) == -1
        assert longest_cycle_length(Graph.empty(0)) == 0

    def test_single_vertex_is_a_cycle_of_length_one(self):
        assert longest_cycle_length(Graph.empty(1)) == 1
        assert longest_path_length(Graph.empty(1)) == 0

    def test_edge_is_a_cycle_of_length_two(self):
        assert longest_cycle_length(complete_graph(2)) == 2


class TestLongestPath:
    @pytest.mark.parametrize("g, want", [(path_graph(5), 4), (petersen(), 9), (K13, 2), (BOWTIE, 4)])
    def test_examples(self, g, want):
        assert longest_path_length(g) == want
        assert oracle_longest_path(g) == want

    def test_disconnected(self):
        g = Graph.from_edges(6, [(0, 1), (2, 3), (3, 4)])
        assert longest_path_length(g) == 2


class TestLongestCycle:
    @pytest.mark.parametrize("g, want", [(petersen(), 9), (BOWTIE, 3), (K13, 2), (cycle_graph(7), 7),
                                         (complete_graph(5), 5)])
    def test_examples(self, g, want):
        assert longest_cycle_length(g) == want
        assert oracle_longest_cycle(g) == want

    def test_isolated_vertices_only(self):
        assert longest_cycle_length(Graph.empty(4)) == 1


class TestCycleSets:
    def test_six_cycle(self):
        assert all_longest_cycle_vertex_sets(cycle_graph(6)) == [frozenset(range(6))]

    def test_bowtie(self):
        assert all_longest_cycle_vertex_sets(BOWTIE) == [frozenset({0, 1, 2}), frozenset({2, 3, 4})]

    def test_k4_dedups_by_vertex_set(self):
        assert all_longest_cycle_vertex_sets(complete_graph(4)) == [frozenset(range(4))]

    def test_petersen_misses_one_vertex_each(self):
        sets = all_longest_cycle_vertex_sets(petersen())
        assert sorted(min(set(range(10)) - s) for s in sets) == list(range(10))
        assert all(len(s) == 9 for s in sets)

    def test_degenerate_raises(self):
        with pytest.raises(DegenerateCircumferenceError):
            all_longest_cycle_vertex_sets(K13)

    @given(graphs(min_n=3, max_n=7))
    def test_sets_match_networkx(self, g):
        circ = nx_longest_cycle(g)
        if circ < 3:
            return
        want = sorted({frozenset(c) for c in nx.simple_cycles(to_nx(g)) if len(c) == circ}, key=sorted)
        assert sorted(all_longest_cycle_vertex_sets(g), key=sorted) == want


class TestWitnesses:
    @given(graphs(min_n=1, max_n=8))
    def test_witnesses_are_valid(self, g):
        t = subset_table(g)
        lp, lc = t.longest_path(), t.longest_cycle()
        for s in t.path_sets(lp):
            p = PathSeq(g, t.hamilton_path(s))
            assert p.length == lp and p.mask == s
        for s in t.cycle_sets(lc):
            c = CycleSeq(g, t.hamilton_cycle(s))
            assert c.length == lc and c.mask == s

    @given(graphs(min_n=1, max_n=8), st.data())
    def test_induced_lookups_agree_with_deletion(self, g, data):
        removed = data.draw(st.sets(st.integers(0, g.n - 1)))
        rest, _ = remove_vertices(g, removed)
        t = subset_table(g)
        mask = t.full & ~sum(1 << v for v in removed)
        assert t.longest_path(mask) == longest_path_length(rest)
        assert t.longest_cycle(mask) == longest_cycle_length(rest)


class TestAgreement:
    @given(graphs(max_n=7))
    def test_dp_matches_networkx(self, g):
        assert longest_path_length(g) == nx_longest_path(g)
        assert longest_cycle_length(g) == nx_longest_cycle(g)

    @given(graphs(max_n=9))
    def test_dp_matches_oracle(self, g):
        assert longest_path_length(g) == oracle_longest_path(g)
        assert longest_cycle_length(g) == oracle_longest_cycle(g)

    def test_seeded_random_graphs(self):
        for i in range(200):
            rng = np.random.default_rng([2024, i])
            n = int(rng.integers(1, 10))
            g = gnp_graph(n, float(rng.uniform(0.1, 0.9)), rng)
            assert longest_path_length(g) == oracle_longest_path(g)
            assert longest_cycle_length(g) == oracle_longest_cycle(g)


class TestMonotonicity:
    @given(graphs(min_n=2, max_n=8), st.data())
    def test_adding_an_edge_never_shrinks(self, g, data):
        missing = [(a, b) for a, b in combinations(range(g.n), 2) if not g.has_edge(a, b)]
        if not missing:
            return
        e = data.draw(st.sampled_from(missing))
        h = Graph.from_edges(g.n, [*g.edges(), e])
        assert longest_path_length(h) >= longest_path_length(g)
        assert longest_cycle_length(h) >= longest_cycle_length(g)

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=50)
    def test_path_at_least_cycle_minus_one(self, g):
        assert longest_path_length(g) >= longest_cycle_length(g) - 1


class TestLimits:
    def test_dp_capacity(self):
        with pytest.raises(CapacityError):
            subset_table(path_graph(12), SolveLimits(max_dp_n=10, max_oracle_n=5))

    def test_oracle_capacity(self):
        with pytest.raises(CapacityError):
            oracle_longest_cycle(path_graph(12), SolveLimits(max_dp_n=22, max_oracle_n=10))

    def test_components_bypass_dp_limit(self):
        g = Graph.from_edges(24, [(i, i + 1) for i in range(11)] + [(12 + i, 12 + (i + 1) % 12) for i in range(12)])
        lim = SolveLimits(max_dp_n=12, max_oracle_n=10)
        assert longest_path_length(g, lim) == 11
        assert longest_cycle_length(g, lim) == 12

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("CIRCUMFERENCE_MAX_DP_N", "15")
        monkeypatch.setenv("CIRCUMFERENCE_MAX_ORACLE_N", "7")
        assert SolveLimits.from_env() == SolveLimits(max_dp_n=15, max_oracle_n=7)

    def test_invalid_limits(self):
        with pytest.raises(ValueError):
            SolveLimits(max_dp_n=8, max_oracle_n=9)
