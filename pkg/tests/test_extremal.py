import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from _graphs import BOWTIE, to_nx
from circumference.exact_solvers import subset_table
from circumference.extremal import ExtremalParams, build_extremal, parameter_grid, predicted_invariants
from circumference.graph_core import min_degree


def test_invalid_parameters():
    with pytest.raises(ValueError):
        ExtremalParams(0, 3)
    with pytest.raises(ValueError):
        ExtremalParams(3, 2)


def test_smallest_member_is_the_bowtie():
    g = build_extremal(ExtremalParams(1, 2))
    assert g.n == 5
    assert sorted(g.degrees(), reverse=True) == [4, 2, 2, 2, 2]
    assert nx.is_isomorphic(to_nx(g), to_nx(BOWTIE))


def test_two_three_degrees():
    g = build_extremal(ExtremalParams(2, 3))
    assert g.n == 8
    assert g.degrees()[:2] == [7, 7]
    assert set(g.degrees()[2:]) == {3}


def test_kappa_equals_delta_is_complete_split():
    g = build_extremal(ExtremalParams(3, 3))
    hubs, rest = range(3), range(3, g.n)
    assert g.n == 7
    assert all(g.has_edge(a, b) for a in hubs for b in range(g.n) if a != b)
    assert not any(g.has_edge(a, b) for a in rest for b in rest if a != b)


@pytest.mark.parametrize("kappa, delta, circ, p_bar, c_bar", [(1, 2, 3, 1, 2), (2, 3, 6, 1, 2), (3, 3, 6, 0, 1)])
def test_frozen_predictions_match_exact_solver(kappa, delta, circ, p_bar, c_bar):
    p = ExtremalParams(kappa, delta)
    pred = predicted_invariants(p)
    assert (pred.circumference, pred.p_bar, pred.c_bar) == (circ, p_bar, c_bar)
    assert pred.bound1 == pred.bound2 == circ
    g = build_extremal(p)
    t = subset_table(g)
    assert t.longest_cycle() == circ
    for s in t.cycle_sets(circ):
        rest = t.full & ~s
        assert (t.longest_path(rest), t.longest_cycle(rest)) == (p_bar, c_bar)


@given(st.integers(1, 4), st.integers(0, 4))
def test_construction_invariants(kappa, extra):
    p = ExtremalParams(kappa, kappa + extra)
    g = build_extremal(p)
    assert g.n == p.n == (kappa + 1) * (extra + 1) + kappa
    assert min_degree(g) == p.delta
    pred = predicted_invariants(p)
    assert pred.bound1 == pred.bound2 == pred.circumference


def test_parameter_grid():
    grid = parameter_grid(20)
    assert len(grid) >= 12
    assert all(p.n <= 20 for p in grid)
    assert ExtremalParams(1, 1) in grid and ExtremalParams(2, 7) in grid
    assert ExtremalParams(2, 8) not in grid
