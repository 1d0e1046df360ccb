import pytest
from hypothesis import given, settings

from _graphs import BOWTIE, K13, complete_graph, graphs, petersen
from circumference.errors import DegenerateCircumferenceError, HypothesisError, SolverMismatchError
from circumference.exact_solvers import subset_table
from circumference.extremal import ExtremalParams, build_extremal
from circumference.graph_core import CycleSeq, Graph, PathSeq
from circumference.spreading import Spreading, classify, find_minimal_spreadings, saturate
from circumference.verification import (
    CheckResult,
    Lemma1Config,
    TheoremRow,
    _oracle_recheck,
    check_lemma1,
    check_lemma1_identities,
    check_lemma1_segments,
    check_lemma2,
    check_lemma3,
    check_proof_claims,
    check_spreading_properties,
    lemma_checks,
    theorem_rows,
    verify_theorem1,
    verify_theorem2,
)

# K_{2,3}: parts {0, 1} and {2, 3, 4}; 0-2-1-3 is a longest cycle and 4 is left over
K23 = Graph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
K23_HOST = CycleSeq(K23, (0, 2, 1, 3))
K23_SPREAD = Spreading(K23, frozenset(), (0, 2, 1, 3), ((0, 4), (2,), (1,), (3,)), cyclic=True)


def longest_cycle_avoiding(g: Graph, v: int) -> CycleSeq:
    t = subset_table(g)
    return CycleSeq(g, t.hamilton_cycle(t.full & ~(1 << v)))


class TestCheckResult:
    def test_failure_needs_witness(self):
        with pytest.raises(ValueError):
            CheckResult("x", "fail")

    def test_unknown_status(self):
        with pytest.raises(ValueError):
            CheckResult("x", "maybe")


class TestAttackPointBound:
    def test_petersen_single_vertex(self):
        g = petersen()
        c = longest_cycle_avoiding(g, 9)
        cfg = Lemma1Config(c, PathSeq(g, (9,)), (PathSeq(g, (9,)),))
        assert cfg.z == (frozenset({4, 6, 7}),)
        r = check_lemma1(g, cfg)
        assert r.passed and r.context["bound"] == 6 and r.context["slack"] == 3
        assert cfg.gaps == (3, 3, 3)
        seg = check_lemma1_segments(g, cfg)
        assert seg.passed
        assert all(len(f) == 1 for f in cfg.f_sets)
        assert check_lemma1_identities(cfg).passed

    def test_bowtie_equality(self):
        c = CycleSeq(BOWTIE, (0, 1, 2))
        m = PathSeq(BOWTIE, (3, 4))
        cfg = Lemma1Config(c, m, (PathSeq(BOWTIE, (3,)), PathSeq(BOWTIE, (4,))))
        r = check_lemma1(BOWTIE, cfg)
        assert r.passed and r.context["bound"] == 3 and r.context["slack"] == 0
        assert check_lemma1_segments(BOWTIE, cfg).status == "not_applicable"

    def test_empty_attack_set(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
        cfg = Lemma1Config(CycleSeq(g, (0, 1, 2)), PathSeq(g, (3,)), (PathSeq(g, (3,)),))
        r = check_lemma1(g, cfg)
        assert r.passed and r.context["bound"] == 0

    def test_extremal_segments(self):
        g = build_extremal(ExtremalParams(2, 3))
        t = subset_table(g)
        cset = t.cycle_sets(6)[0]
        left = [v for v in range(g.n) if not cset >> v & 1]
        assert len(left) == 2 and g.has_edge(*left)
        c = CycleSeq(g, t.hamilton_cycle(cset))
        cfg = Lemma1Config(c, PathSeq(g, tuple(left)), tuple(PathSeq(g, (v,)) for v in left))
        assert check_lemma1(g, cfg).passed
        seg = check_lemma1_segments(g, cfg)
        assert seg.passed and seg.context["t"] >= 2

    def test_refuses_non_longest_cycle(self):
        g = petersen()
        cfg = Lemma1Config(CycleSeq(g, (0, 1, 2, 3, 4)), PathSeq(g, (5,)), (PathSeq(g, (5,)),))
        with pytest.raises(HypothesisError):
            check_lemma1(g, cfg)

    def test_config_rejects_paths_through_cycle(self):
        c = CycleSeq(BOWTIE, (0, 1, 2))
        with pytest.raises(ValueError):
            Lemma1Config(c, PathSeq(BOWTIE, (3,)), (PathSeq(BOWTIE, (3, 2)),))

    def test_config_rejects_second_contact_with_m(self):
        c = CycleSeq(BOWTIE, (0, 1, 2))
        with pytest.raises(ValueError):
            Lemma1Config(c, PathSeq(BOWTIE, (3, 4)), (PathSeq(BOWTIE, (3, 4)),))


class TestCycleHostBound:
    def test_equality_on_k23(self):
        r = check_lemma2(K23, (), K23_HOST, K23_SPREAD)
        assert r.passed and r.context["checked"] == 1

    def test_vacuous_when_u1_empty(self):
        g = complete_graph(4)
        m = CycleSeq(g, (0, 1, 2, 3))
        s = Spreading(g, frozenset(), m.vertices, tuple((v,) for v in m.vertices), cyclic=True)
        r = check_lemma2(g, (), m, s)
        assert r.passed and r.context["checked"] == 0

    def test_non_minimal_spreading_is_refused(self):
        s = Spreading(K23, frozenset(), (0, 2, 1, 3), ((0,), (2,), (1,), (3,)), cyclic=True)
        with pytest.raises(HypothesisError):
            check_lemma2(K23, (), K23_HOST, s)

    def test_non_longest_host_is_refused(self):
        g = complete_graph(4)
        m = CycleSeq(g, (0, 1, 2))
        s = Spreading(g, frozenset(), m.vertices, ((0, 3), (1,), (2,)), cyclic=True)
        with pytest.raises(HypothesisError):
            check_lemma2(g, (), m, s)


class TestPathHostBound:
    def test_star(self):
        host = PathSeq(K13, (1, 0, 2))
        s = find_minimal_spreadings(K13, (), host)[0]
        r = check_lemma3(K13, (), host, s)
        assert r.passed and r.context["checked"] == 1

    def test_vacuous(self):
        host = PathSeq(BOWTIE, (3, 4))
        s = find_minimal_spreadings(BOWTIE, {0, 1, 2}, host)[0]
        assert check_lemma3(BOWTIE, {0, 1, 2}, host, s).passed

    def test_wrong_host_kind(self):
        with pytest.raises(HypothesisError):
            check_lemma3(K23, (), K23_HOST, K23_SPREAD)


class TestSpreadingProperties:
    def test_one_edge_path_may_end_next_to_a_trivial_root(self):
        # the endpoint-avoids-U0 property needs a path with at least two edges
        cls = classify(K23_SPREAD)
        assert cls.phi[0] & cls.u0 == {1}
        results = {r.name: r for r in check_spreading_properties(K23, (), K23_HOST, K23_SPREAD)}
        assert results["claim2"].passed
        assert results["containment"].passed
        assert results["double_counting"].passed

    def test_unsaturated_skips_degree_split(self):
        # triangle with the pendant path 0-3-4
        g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)])
        host = CycleSeq(g, (0, 1, 2))
        s = Spreading(g, frozenset(), (0, 1, 2), ((0, 3), (1,), (2,)), cyclic=True)
        assert saturate(s) is not s
        names = {r.name: r.status for r in check_spreading_properties(g, (), host, s)}
        assert names["saturation_identity"] == "not_applicable"


class TestProofClaims:
    def test_bowtie_path_mode(self):
        c = CycleSeq(BOWTIE, (0, 1, 2))
        m = PathSeq(BOWTIE, (3, 4))
        s = find_minimal_spreadings(BOWTIE, {0, 1, 2}, m)[0]
        results = {r.name: r for r in check_proof_claims(BOWTIE, c, m, s, "path")}
        assert set(results) >= {"a1", "a2", "a3", "claim2", "double_counting"}
        assert all(not r.failed for r in results.values())

    def test_cycle_mode_on_extremal(self):
        g = build_extremal(ExtremalParams(2, 3))
        t = subset_table(g)
        cset = t.cycle_sets(6)[0]
        c = CycleSeq(g, t.hamilton_cycle(cset))
        rest = t.full & ~cset
        m = CycleSeq(g, t.hamilton_cycle(t.cycle_sets(t.longest_cycle(rest), rest)[0]))
        for s in find_minimal_spreadings(g, c.vertices, m, "U0_then_Ustar"):
            results = check_proof_claims(g, c, m, s, "cycle")
            names = {r.name for r in results}
            assert {"b1", "b2", "b3", "b4", "b5", "b6", "ustar_partition"} <= names
            assert not any(r.failed for r in results)

    def test_mode_host_mismatch(self):
        c = CycleSeq(BOWTIE, (0, 1, 2))
        m = PathSeq(BOWTIE, (3, 4))
        s = find_minimal_spreadings(BOWTIE, {0, 1, 2}, m)[0]
        with pytest.raises(HypothesisError):
            check_proof_claims(BOWTIE, c, m, s, "cycle")
        with pytest.raises(ValueError):
            check_proof_claims(BOWTIE, c, m, s, "sideways")


class TestCircumferenceBounds:
    def test_k5(self):
        for check in (verify_theorem1, verify_theorem2):
            (r,) = check(complete_graph(5))
            assert r.passed and r.context["bound"] == 5 and r.context["sharp"]
        (r,) = verify_theorem1(complete_graph(5))
        assert r.context["p_bar"] == -1 and r.context["c_bar"] == 0

    def test_bowtie_is_sharp(self):
        for check in (verify_theorem1, verify_theorem2):
            results = check(BOWTIE)
            assert len(results) == 2
            for r in results:
                assert r.passed and r.context["bound"] == 3 and r.context["slack"] == 0
                assert r.context["p_bar"] == 1 and r.context["c_bar"] == 2

    def test_petersen(self):
        r1 = verify_theorem1(petersen())
        r2 = verify_theorem2(petersen())
        assert len(r1) == len(r2) == 10
        assert {r.context["bound"] for r in r1} == {6}
        assert {r.context["bound"] for r in r2} == {6}
        assert {(r.context["p_bar"], r.context["c_bar"]) for r in r1} == {(0, 1)}

    def test_degenerate_is_refused_unless_allowed(self):
        with pytest.raises(DegenerateCircumferenceError):
            verify_theorem1(K13)
        results = verify_theorem1(K13, allow_degenerate=True)
        assert all(r.context["degenerate"] for r in results)

    def test_partial_quantification(self):
        results = verify_theorem1(petersen(), max_sets=1)
        assert len(results) == 1 and results[0].context["partial"]

    def test_oracle_recheck_catches_disagreement(self):
        row = TheoremRow(frozenset({0, 1, 2}), 3, 2, p_bar=2, c_bar=2)
        with pytest.raises(SolverMismatchError):
            _oracle_recheck(BOWTIE, row, 1, None)

    @given(graphs(min_n=1, max_n=8))
    def test_bounds_hold(self, g):
        circ, rows = theorem_rows(g)
        if circ < 3:
            return
        for row in rows:
            assert circ >= row.bound1
            assert circ >= row.bound2


class TestGeneratedInstances:
    @pytest.mark.parametrize("g", [BOWTIE, K23, K13, build_extremal(ExtremalParams(2, 3))])
    def test_named_graphs(self, g):
        results = lemma_checks(g, "all", extra_removed=range(1, 1 << min(g.n, 5)))
        assert results
        assert not [r for r in results if r.failed]

    @given(graphs(min_n=1, max_n=6))
    @settings(max_examples=60)
    def test_random_graphs(self, g):
        assert not [r.to_dict() for r in lemma_checks(g, "all") if r.failed]
