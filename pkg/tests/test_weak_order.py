import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperlat.hypergraph import all_intervals
from hyperlat.orientations import Orientation, enumerate_acyclic, is_acyclic
from hyperlat.weak_order import (
    all_permutations,
    avoids_pattern,
    complement,
    fiber,
    fiber_bounds,
    fiber_from_bounds,
    format_permutation,
    from_inversions,
    identity,
    inversions,
    longest,
    orient,
    parse_permutation,
    weak_join,
    weak_leq,
    weak_meet,
)

from helpers import hg, interval_hypergraphs, hypergraphs, ori, permutations_of


def brute_bound(sigma, tau, upper=True):
    n = len(sigma)
    if upper:
        cands = [p for p in all_permutations(n) if weak_leq(sigma, p) and weak_leq(tau, p)]
        best = [p for p in cands if all(weak_leq(p, q) for q in cands)]
    else:
        cands = [p for p in all_permutations(n) if weak_leq(p, sigma) and weak_leq(p, tau)]
        best = [p for p in cands if all(weak_leq(q, p) for q in cands)]
    assert len(best) == 1
    return best[0]


def test_parse_and_format():
    assert parse_permutation("4132") == (4, 1, 3, 2)
    assert parse_permutation("2,1,3") == (2, 1, 3)
    assert format_permutation((4, 1, 3, 2)) == "4132"
    assert format_permutation(tuple(range(10, 0, -1))).startswith("10,9")
    for bad in ("4133", "12x", "0,1"):
        with pytest.raises(ValueError):
            parse_permutation(bad)


def test_inversion_example():
    assert inversions((2, 4, 1, 3)) == {(2, 1), (4, 1), (4, 3)}
    assert inversions(identity(4)) == frozenset() and len(inversions(longest(4))) == 6


def test_weak_examples():
    assert weak_join((2, 1, 3, 4), (1, 3, 2, 4)) == (3, 2, 1, 4)
    assert weak_meet((2, 4, 3, 1), (1, 3, 4, 2)) == (1, 2, 3, 4)


def test_from_inversions_rejects_non_inversion_sets():
    with pytest.raises(ValueError):
        from_inversions(3, {(3, 1)})  # 3 before 1 forces 2 to sit on one side of an inversion


@given(permutations_of(5))
def test_inversion_round_trip(p):
    assert from_inversions(5, inversions(p)) == p
    assert complement(complement(p)) == p
    assert len(inversions(complement(p))) == 10 - len(inversions(p))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(permutations_of(n), permutations_of(n))))
def test_join_and_meet_are_least_and_greatest_bounds(pair):
    s, t = pair
    assert weak_join(s, t) == brute_bound(s, t, upper=True)
    assert weak_meet(s, t) == brute_bound(s, t, upper=False)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(permutations_of(n), permutations_of(n), permutations_of(n))))
def test_lattice_axioms(triple):
    a, b, c = triple
    assert weak_join(a, b) == weak_join(b, a) and weak_meet(a, b) == weak_meet(b, a)
    assert weak_join(a, weak_join(b, c)) == weak_join(weak_join(a, b), c)
    assert weak_meet(a, weak_meet(b, c)) == weak_meet(weak_meet(a, b), c)
    assert weak_join(a, weak_meet(a, b)) == a and weak_meet(a, weak_join(a, b)) == a
    assert weak_leq(a, weak_join(a, b)) and weak_leq(weak_meet(a, b), a)


def test_orient_examples():
    assert orient((4, 1, 3, 2), hg("4:123,1234,23,234")).choice == (1, 4, 3, 4)
    assert orient((3, 2, 1, 4), hg("4:123,23,234,1234")).choice == (3, 3, 3, 3)
    with pytest.raises(ValueError):
        orient((1, 2), hg("3:123"))


@given(hypergraphs(max_n=4), st.data())
def test_orient_is_acyclic_and_lies_in_its_fiber(H, data):
    p = data.draw(permutations_of(H.n))
    A = orient(p, H)
    assert is_acyclic(A) and p in fiber(A)


@given(interval_hypergraphs(max_n=5), st.data())
def test_orient_is_order_preserving(I, data):
    from hyperlat.hyperlattice import leq_source

    p = data.draw(permutations_of(I.n))
    q = weak_join(p, data.draw(permutations_of(I.n)))
    assert leq_source(orient(p, I), orient(q, I))


@given(hypergraphs(max_n=4))
def test_fibers_partition_permutations(H):
    seen = []
    for A in enumerate_acyclic(H):
        members = fiber(A)
        assert members and all(orient(p, H) == A for p in members)
        seen += members
    assert sorted(seen) == all_permutations(H.n)


def test_fiber_example():
    A = ori(hg("4:123,134"), 2, 4)
    assert [format_permutation(p) for p in fiber(A)] == ["2413", "2431", "4213", "4231"]
    members = fiber(A)
    # not an interval hypergraph, so compare inversion sets directly
    lows = [p for p in members if all(weak_leq(p, q) for q in members)]
    highs = [p for p in members if all(weak_leq(q, p) for q in members)]
    assert lows == [(2, 4, 1, 3)] and highs == [(4, 2, 3, 1)]


def test_fiber_bounds_examples():
    I = hg("4:123,23,234,1234")
    assert fiber_bounds(ori(I, 2, 2, 2, 2)) == ((2, 1, 3, 4), (2, 4, 3, 1))
    T3 = all_intervals(3)
    assert fiber_bounds(Orientation(T3, (1, 1, 2)))[0] == (1, 2, 3)


@given(interval_hypergraphs(max_n=5))
def test_fibers_are_intervals_with_pattern_avoiding_ends(I):
    for A in enumerate_acyclic(I):
        lo, hi = fiber_bounds(A)
        assert fiber_from_bounds(A) == fiber(A)
        assert avoids_pattern(lo, (2, 3, 1)) and avoids_pattern(hi, (2, 1, 3))


def test_pattern_avoidance():
    assert not avoids_pattern((2, 3, 1), (2, 3, 1))
    assert avoids_pattern((1, 2, 3, 4), (2, 1))
    assert not avoids_pattern((3, 1, 4, 2), (2, 1))
