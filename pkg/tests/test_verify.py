import json

import pytest

from hyperlat.hypergraph import HypergraphError, all_intervals, intersection_closed, make_interval_hypergraph
from hyperlat.hyperlattice import catalan, poset_of
from hyperlat.verify import (
    ALL_CHECKS,
    check_instance,
    maximal_intervals,
    run_verify,
    tamari_product_applies,
    tamari_product_size,
)

from helpers import hg


def strict_witness_join_sd(I):
    """The witness condition with ``s' < v'`` instead of ``s' <= v'``."""
    ivs = I.intervals
    for s, s2 in ivs:
        for t, t2 in ivs:
            if not (t <= s2 < t2):
                continue
            m = min(s, t)
            if not any(r < m and s <= r2 < s2 for r, r2 in ivs):
                continue
            if not any(u < m and s2 < u2 for u, u2 in ivs):
                continue
            if not any(v < s and s2 < v2 < t2 for v, v2 in ivs):
                return False
    return intersection_closed(I)


def test_report_schema():
    report = check_instance(all_intervals(3))
    obj = json.loads(json.dumps(report.to_obj()))
    assert set(obj) == {"instance", "checks", "ms"}
    assert [c["name"] for c in obj["checks"]] == [n for n in ALL_CHECKS if n != "distributive-bijection"]
    assert report.ok and not report.mismatches()


def test_checks_are_skipped_when_they_do_not_apply():
    names = [c.name for c in check_instance(hg("4:123,234")).checks]
    assert names == ["lattice", "distributive", "join-semidistributive", "meet-semidistributive",
                     "source-order", "covers", "fibers"]
    assert "distributive-bijection" in [c.name for c in check_instance(hg("4:123,23,234")).checks]


def test_check_selection_and_errors():
    assert [c.name for c in check_instance(hg("3:12"), checks=["fibers"]).checks] == ["fibers"]
    with pytest.raises(ValueError):
        check_instance(hg("3:12"), checks=["nope"])
    with pytest.raises(HypergraphError):
        check_instance(hg("4:123,134"))


def test_timing_is_opt_in():
    assert check_instance(hg("3:12")).ms is None
    assert check_instance(hg("3:12"), timing=True).ms >= 0


def test_run_verify_counts_and_order():
    reports = list(run_verify(3))
    assert len(reports) == 8 and all(r.ok for r in reports)
    assert reports[0].instance == "n=3 {}"
    assert len(list(run_verify(3, nmin=1, checks=["lattice"]))) == 11
    with pytest.raises(HypergraphError):
        list(run_verify(6))


def test_parallel_matches_serial():
    serial = [r.to_obj() for r in run_verify(4, checks=["lattice", "covers"])]
    parallel = [r.to_obj() for r in run_verify(4, checks=["lattice", "covers"], jobs=2)]
    assert serial == parallel


def test_witness_may_end_with_the_premise_edge():
    # the strict version rejects the full interval hypergraph on [4], whose lattice is semidistributive
    T4 = all_intervals(4)
    assert poset_of(T4).is_join_semidistributive()
    assert not strict_witness_join_sd(T4)
    assert check_instance(T4, checks=["join-semidistributive"]).ok


def test_subinterval_closed_without_a_catalan_product():
    I = hg("4:12,123,23,234,34")
    P = poset_of(I)
    assert len(P) == 12
    assert 12 not in {catalan(a) * catalan(b) for a in range(1, 5) for b in range(1, 5)} | {catalan(k) for k in range(6)}
    assert maximal_intervals(I) == [(1, 3), (2, 4)]
    assert not tamari_product_applies(I)
    report = check_instance(I, checks=["meet-morphism", "join-morphism", "tamari-product"])
    assert [c.name for c in report.checks] == ["meet-morphism", "join-morphism"] and report.ok


def test_catalan_product_when_maximal_intervals_touch_in_one_vertex():
    I = make_interval_hypergraph(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
    assert tamari_product_applies(I)
    assert tamari_product_size(I) == 25 == len(poset_of(I))


def test_exhaustive_four():
    assert all(r.ok for r in run_verify(4))
