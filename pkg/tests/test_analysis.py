import pytest

from jaco import analysis
from jaco.analysis import (
    TheoremViolationError,
    complete_prefix_count,
    edge_count_direct,
    edge_count_recursive,
    edge_count_report,
    edge_count_theorem,
    milestone_delta,
    render_report,
    verify_suite,
)
from jaco.graph import build
from jaco.oracles import naive_build


class TestEdgeCounts:
    def test_direct_examples(self):
        assert edge_count_direct(build(1, 8)) == 13
        assert edge_count_direct(build(1, 1)) == 0
        assert edge_count_direct(build(2, 5)) == 8

    def test_direct_matches_naive_enumeration(self):
        for a in (1, 2, 3):
            for n in (1, 2, 9, 60):
                naive_arcs, _ = naive_build(a, n)
                assert edge_count_direct(build(a, n)) == len(naive_arcs)

    def test_theorem_examples(self):
        assert edge_count_theorem(build(1, 8)) == 13
        assert edge_count_theorem(build(2, 4)) == 5
        assert edge_count_theorem(build(1, 2)) == 1

    def test_recursive_examples(self):
        assert edge_count_recursive(1, 8) == [0, 1, 2, 3, 5, 7, 10, 13]
        assert edge_count_recursive(2, 5) == [0, 1, 3, 5, 8]
        assert edge_count_recursive(3, 4) == [0, 1, 3, 6]

    @pytest.mark.parametrize("a", [1, 2, 3, 4])
    def test_triple_agreement(self, a):
        recursive = edge_count_recursive(a, 400)
        for n in range(1, 401):
            g = build(a, n)
            direct = edge_count_direct(g)
            assert direct == edge_count_theorem(g) == recursive[n - 1]

    def test_report_object(self):
        report = edge_count_report(build(2, 40))
        assert report.direct == report.theorem == report.recursive


class TestCompletePrefixCount:
    def test_examples(self):
        assert complete_prefix_count(2, 3) == 3
        assert complete_prefix_count(5, 1) == 0
        assert complete_prefix_count(1, 2) == 1

    def test_domain_error_beyond_prefix(self):
        with pytest.raises(ValueError):
            complete_prefix_count(2, 4)

    @pytest.mark.parametrize("a", list(range(1, 11)))
    def test_matches_graph(self, a):
        for m in range(1, a + 2):
            assert edge_count_direct(build(a, m)) == complete_prefix_count(a, m)


class TestMilestone:
    @pytest.mark.parametrize("a,n_star", [(1, 3), (2, 7), (3, 13)])
    def test_examples(self, a, n_star):
        assert milestone_delta(a).n_star == n_star

    @pytest.mark.parametrize("a", list(range(1, 21)))
    def test_prediction(self, a):
        assert milestone_delta(a).n_star == a * (a + 1) + 1


class TestVerifySuite:
    def test_all_pass_default_grid(self):
        report = verify_suite(1, 3, 200)
        assert report.passed
        assert len(report.claims) >= 15

    def test_degenerate_grid(self):
        report = verify_suite(1, 1, 1)
        assert report.passed

    def test_deterministic_across_jobs(self):
        serial = render_report(verify_suite(1, 2, 60, jobs=1))
        parallel = render_report(verify_suite(1, 2, 60, jobs=4))
        assert serial == parallel

    def test_report_format(self):
        text = render_report(verify_suite(1, 1, 30))
        lines = text.splitlines()
        assert lines[-1] == "OVERALL PASS"
        for line in lines[:-1]:
            assert line.startswith("CLAIM ")
            assert " PASS " in line or " FAIL " in line
            assert "checked=" in line
        ids = [line.split()[1] for line in lines[:-1]]
        assert len(ids) == len(set(ids))  # every claim exactly once

    def test_injected_fault_is_pinpointed(self, monkeypatch):
        # perturbing the closed form must fail exactly that claim, with a
        # counterexample naming the parameters
        real = analysis.sequences.c_closed

        def warped(a, n):
            value = real(a, n)
            return value + 1 if (a, n) == (2, 17) else value

        monkeypatch.setattr(analysis.sequences, "c_closed", warped)
        report = verify_suite(2, 2, 40)
        failed = [c for c in report.claims if not c.passed]
        assert [c.claim_id for c in failed] == ["seq.closed_form"]
        assert failed[0].counterexample == "a=2 n=17"
        assert not report.passed
        assert render_report(report).splitlines()[-1] == "OVERALL FAIL"

    def test_rejects_bad_grid(self):
        with pytest.raises(ValueError):
            verify_suite(2, 1, 10)
        with pytest.raises(ValueError):
            verify_suite(1, 1, 0)
        with pytest.raises(ValueError):
            verify_suite(1, 1, 10, jobs=0)


def test_milestone_reports_violation_when_search_exhausts(monkeypatch):
    # feed the search a degenerate table in which no vertex ever reaches
    # the target degree; the bounded search must fail loudly
    from jaco.sequences import SequenceTable

    def flat_table(a, horizon):
        zeros = tuple([0] * (horizon + 1))
        return SequenceTable(a, horizon, zeros, zeros, zeros, zeros)

    monkeypatch.setattr(analysis.sequences, "c_series", flat_table)
    with pytest.raises(TheoremViolationError):
        milestone_delta(2)
