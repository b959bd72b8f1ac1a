import pytest
from hypothesis import given

from hyperlat.hypergraph import (
    HypergraphError,
    IntervalHypergraph,
    SchroederTree,
    all_intervals,
    as_interval,
    enumerate_interval_hypergraphs,
    final_intervals,
    final_subinterval_closed,
    format_edge,
    initial_intervals,
    initial_subinterval_closed,
    intersection_closed,
    is_distributive_hypergraph,
    is_join_sd_hypergraph,
    is_meet_sd_hypergraph,
    is_schroeder,
    left_comb,
    make_hypergraph,
    make_interval_hypergraph,
    mask_of,
    reflect,
    schroeder_hypergraph,
    vertices_of,
)

from helpers import hg, interval_hypergraphs


def test_singletons_are_added_and_edges_deduplicated():
    H = make_hypergraph(4, [[1, 2, 3], [3, 2, 1], [2]])
    assert H.edges.count(mask_of([1, 2, 3])) == 1
    assert all(mask_of([v]) in H for v in range(1, 5))
    assert H.nonsingletons == (mask_of([1, 2, 3]),)


def test_canonical_order_is_by_min_then_max():
    H = hg("4:234,1234,23,123")
    assert [format_edge(e) for e in H.nonsingletons] == ["123", "1234", "23", "234"]


def test_equal_inputs_give_equal_hashable_hypergraphs():
    assert hg("4:134,123") == hg("4:123,134")
    assert len({hg("4:134,123"), hg("4:123,134")}) == 1


@pytest.mark.parametrize("edges", [[[0, 1]], [[1, 5]], [[]]])
def test_rejects_bad_vertices(edges):
    with pytest.raises(HypergraphError):
        make_hypergraph(4, edges)


def test_rejects_bad_n():
    with pytest.raises(HypergraphError):
        make_hypergraph(0, [])


def test_interval_recognition():
    assert isinstance(hg("4:123,23"), IntervalHypergraph)
    assert as_interval(hg("4:123,134")) is None
    assert isinstance(make_interval_hypergraph(3, [(1, 3)]), IntervalHypergraph)
    with pytest.raises(HypergraphError):
        make_interval_hypergraph(3, [(3, 1)])


def test_mask_round_trip():
    assert vertices_of(mask_of([4, 1, 3])) == (1, 3, 4)


def test_reflection_example():
    assert reflect(hg("4:12,123")) == hg("4:34,234")


@given(interval_hypergraphs())
def test_reflection_is_an_involution(I):
    assert reflect(reflect(I)) == I
    assert isinstance(reflect(I), IntervalHypergraph)


def test_family_constructors():
    assert len(all_intervals(4).nonsingletons) == 6
    assert initial_intervals(4) == hg("4:12,123,1234")
    assert final_intervals(4) == hg("4:34,234,1234")


def test_enumeration_counts_and_cap():
    assert [sum(1 for _ in enumerate_interval_hypergraphs(n)) for n in range(1, 5)] == [1, 2, 8, 64]
    with pytest.raises(HypergraphError):
        next(enumerate_interval_hypergraphs(6))


@pytest.mark.parametrize(
    "compact, closed",
    [
        ("4:123,234", False),
        ("4:123,23,234,1234", True),
        ("4:12,23,34,1234", True),
        ("3:", True),
    ],
)
def test_intersection_closed(compact, closed):
    assert intersection_closed(hg(compact)) is closed


def test_predicates_need_intervals():
    with pytest.raises(HypergraphError):
        intersection_closed(hg("4:134"))


@pytest.mark.parametrize(
    "compact, distributive, join_sd, meet_sd",
    [
        ("3:12,23,123", False, True, True),
        ("4:123,23,234", True, True, True),
        ("4:123,1234", True, True, True),
        ("4:12,34,1234", True, True, True),
        ("4:12,123,1234", True, True, True),
        ("4:23,34,1234", False, True, True),
        ("4:123,23,234,1234", False, True, True),
        ("4:12,23,34,1234", False, False, False),
        ("4:12,23,234,1234", False, False, True),
    ],
)
def test_lattice_characterizations(compact, distributive, join_sd, meet_sd):
    I = hg(compact)
    assert is_distributive_hypergraph(I) is distributive
    assert is_join_sd_hypergraph(I) is join_sd
    assert is_meet_sd_hypergraph(I) is meet_sd


def test_full_interval_hypergraph_on_four_is_join_sd():
    # the witness edge [1,3] ends where [2,3] ends
    assert is_join_sd_hypergraph(all_intervals(4))


@given(interval_hypergraphs())
def test_distributive_implies_semidistributive(I):
    if is_distributive_hypergraph(I):
        assert is_join_sd_hypergraph(I) and is_meet_sd_hypergraph(I)


@given(interval_hypergraphs())
def test_meet_sd_is_join_sd_of_reflection(I):
    assert is_meet_sd_hypergraph(I) == is_join_sd_hypergraph(reflect(I))
    assert initial_subinterval_closed(I) == final_subinterval_closed(reflect(I))


def test_subinterval_closure():
    assert initial_subinterval_closed(initial_intervals(4))
    assert not final_subinterval_closed(initial_intervals(4))
    assert initial_subinterval_closed(hg("3:12,23,123"))
    assert not initial_subinterval_closed(hg("4:123,1234"))


def test_schroeder_trees():
    assert schroeder_hypergraph(left_comb(4)) == initial_intervals(4)
    t = SchroederTree.node(SchroederTree.leaf(), SchroederTree.node(*[SchroederTree.leaf()] * 3))
    H = schroeder_hypergraph(t)
    assert H == hg("4:234,1234") and t.leaf_count() == 4
    assert is_schroeder(H) and not is_schroeder(hg("4:123,234"))
    with pytest.raises(HypergraphError):
        schroeder_hypergraph(SchroederTree.node(SchroederTree.leaf()))
