import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperlat.hypergraph import all_intervals, make_hypergraph
from hyperlat.hyperlattice import poset_of
from hyperlat.orientations import (
    Orientation,
    OrientationError,
    bottom_orientation,
    decreasing_flip_targets,
    enumerate_acyclic,
    flip,
    flip_is_legal_interval,
    increasing_flip_targets,
    is_acyclic,
    is_acyclic_interval,
    is_cover,
    parse_orientation,
    reflect_orientation,
    top_orientation,
    vertex_coordinates,
    vertex_poset,
)

from helpers import hg, hypergraphs, interval_hypergraphs, ori

CROSSING = hg("4:123,134")  # two triangles sharing 1 and 3, not an interval hypergraph


def all_choices(H):
    from hyperlat.hypergraph import vertices_of

    for c in itertools.product(*(vertices_of(e) for e in H.nonsingletons)):
        yield Orientation(H, c)


def test_display_and_parse():
    A = parse_orientation(CROSSING, " (2, 4) ")
    assert A.choice == (2, 4) and str(A) == "(2,4)"
    assert parse_orientation(hg("3:"), "()").choice == ()


@pytest.mark.parametrize("text", ["2,4", "(2;4)", "(a,b)", "(2,4"])
def test_parse_rejects_malformed(text):
    with pytest.raises(OrientationError):
        parse_orientation(CROSSING, text)


def test_sources_must_lie_in_their_edge():
    with pytest.raises(OrientationError):
        ori(CROSSING, 4, 4)  # 4 is not in 123
    with pytest.raises(OrientationError):
        ori(CROSSING, 1)


def test_source_lookup_includes_singletons():
    A = ori(CROSSING, 2, 4)
    assert A.source(0b0111) == 2 and A.source(0b0100) == 3


def test_crossing_count_and_triangle_control():
    assert len(enumerate_acyclic(CROSSING)) == 7
    tri = make_hypergraph(3, [[1, 2], [2, 3], [1, 3]])
    assert len(enumerate_acyclic(tri)) == 6
    assert not is_acyclic(Orientation(tri, (1, 3, 2)))  # 1 -> 2 -> 3 -> 1
    with pytest.raises(Exception):
        is_acyclic_interval(Orientation(tri, (1, 3, 2)))


def test_cyclic_interval_example():
    # edges in order 12, 123, 23; sources 2, 1, 3 put 2 below 1 below 2
    I = hg("3:12,23,123")
    A = ori(I, 2, 1, 3)
    assert not is_acyclic(A) and not is_acyclic_interval(A)


@given(hypergraphs(max_n=4), st.data())
def test_enumeration_matches_brute_force(H, data):
    brute = {A for A in all_choices(H) if is_acyclic(A)}
    assert set(enumerate_acyclic(H)) == brute


@given(interval_hypergraphs(max_n=4), st.data())
def test_pairwise_acyclicity_test_agrees_on_intervals(I, data):
    for A in all_choices(I):
        assert is_acyclic_interval(A) == is_acyclic(A)


def test_flip_examples():
    assert flip(ori(hg("4:123,23,234,1234"), 1, 1, 2, 2), 2, 4).choice == (1, 1, 2, 4)
    targets = [(i, j, B.choice) for i, j, B in increasing_flip_targets(ori(CROSSING, 1, 1))]
    assert targets == [(1, 2, (2, 1)), (1, 3, (3, 3)), (1, 4, (1, 4))]


def test_legal_flip_in_small_tamari():
    T3 = all_intervals(3)
    assert flip_is_legal_interval(bottom_orientation(T3), 1, 2)
    assert flip_is_legal_interval(bottom_orientation(T3), 2, 3)
    assert not flip_is_legal_interval(ori(hg("3:123"), 1), 2, 3)  # nothing sourced at 2 moves
    with pytest.raises(OrientationError):
        flip_is_legal_interval(bottom_orientation(T3), 2, 1)


def test_flip_that_is_not_a_cover():
    I = hg("3:123")
    A = ori(I, 1)
    assert flip_is_legal_interval(A, 1, 3)
    assert not is_cover(A, 1, 3)
    assert is_cover(A, 1, 2) and is_cover(ori(I, 2), 2, 3)


def test_cover_through_an_edge_the_flip_leaves_alone():
    # flipping 1 -> 2 would also move 12, so nothing lies between (1,1) and (1,3)
    I = hg("3:12,123")
    assert is_cover(ori(I, 1, 1), 1, 3)


@given(interval_hypergraphs(max_n=5))
def test_legal_flip_test_matches_direct_acyclicity(I):
    n = I.n
    for A in enumerate_acyclic(I):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                B = flip(A, i, j)
                assert flip_is_legal_interval(A, i, j) == (B != A and is_acyclic(B))


@given(interval_hypergraphs(max_n=5))
def test_cover_test_matches_hasse_diagram(I):
    P = poset_of(I, "flips")
    covers = set(P.covers())
    for A in enumerate_acyclic(I):
        for i, j, B in increasing_flip_targets(A):
            assert is_cover(A, i, j) == ((P.index(A), P.index(B)) in covers)


@given(interval_hypergraphs(max_n=5))
def test_every_non_top_orientation_can_flip_up(I):
    top = top_orientation(I)
    assert is_acyclic(top) and is_acyclic(bottom_orientation(I))
    for A in enumerate_acyclic(I):
        assert (A == top) == (not increasing_flip_targets(A))


@given(interval_hypergraphs(max_n=5))
def test_reflection_swaps_flip_directions(I):
    for A in enumerate_acyclic(I):
        assert reflect_orientation(reflect_orientation(A)) == A
        down = {B for _, _, B in decreasing_flip_targets(A)}
        assert all(A in {C for _, _, C in increasing_flip_targets(B)} for B in down)


def test_vertex_poset_and_coordinates():
    V = vertex_poset(ori(CROSSING, 2, 4))
    assert V.strict_pairs() == [(2, 1), (2, 3), (4, 1), (4, 3)]
    assert V.leq(2, 2) and V.lt(4, 3) and not V.leq(1, 3)
    assert vertex_coordinates(ori(CROSSING, 1, 1)) == (3, 1, 1, 1)
    with pytest.raises(OrientationError):
        vertex_poset(ori(hg("3:12,23,123"), 2, 1, 3))


@given(hypergraphs(max_n=4))
def test_coordinates_sum_to_edge_count(H):
    for A in enumerate_acyclic(H):
        assert sum(vertex_coordinates(A)) == len(H.edges)
