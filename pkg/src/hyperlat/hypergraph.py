"""Hypergraphs on ``[n]`` and the structural predicates used by the lattice criteria.

Hyperedges are stored as integer bitmasks: vertex ``v`` (1-based) is bit ``v - 1``.
Every hypergraph contains all singletons; constructors insert them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import config


class HypergraphError(ValueError):
    """Raised for malformed hypergraphs or unmet preconditions."""


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def interval_mask(lo: int, hi: int) -> int:
    """Bitmask of ``[lo, hi]``; empty when ``lo > hi``."""
    if lo > hi:
        return 0
    return ((1 << hi) - 1) ^ ((1 << (lo - 1)) - 1)


def low(mask: int) -> int:
    return (mask & -mask).bit_length()


def high(mask: int) -> int:
    return mask.bit_length()


def is_contiguous(mask: int) -> bool:
    return mask != 0 and mask == interval_mask(low(mask), high(mask))


def _edge_key(mask: int) -> tuple:
    return (low(mask), high(mask), vertices_of(mask))


def format_edge(mask: int) -> str:
    vs = vertices_of(mask)
    if vs and vs[-1] <= 9:
        return "".join(map(str, vs))
    return "{" + ",".join(map(str, vs)) + "}"


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A hypergraph on ``[n]`` with canonically ordered edges (all singletons included).

    ``edges`` is sorted by ``(min, max, members)``; ``nonsingletons`` keeps the same
    order and is the index set of orientation tuples.
    """

    n: int
    edges: tuple[int, ...]
    nonsingletons: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "nonsingletons", tuple(e for e in self.edges if e & (e - 1))
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={self})"

    def __str__(self) -> str:
        return "{" + ",".join(format_edge(e) for e in self.edges) + "}"

    def __contains__(self, mask: int) -> bool:
        return mask in self._edge_set

    @property
    def _edge_set(self) -> frozenset[int]:
        cached = self.__dict__.get("_edge_set_cache")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set_cache", cached)
        return cached

    def edge_vertices(self) -> list[tuple[int, ...]]:
        return [vertices_of(e) for e in self.edges]

    def describe(self) -> str:
        """Short form listing only the non-singleton edges, e.g. ``n=4 {123,134}``."""
        return f"n={self.n} {{" + ",".join(format_edge(e) for e in self.nonsingletons) + "}"


class IntervalHypergraph(Hypergraph):
    """A hypergraph whose every edge is an interval ``[lo, hi]``."""

    @property
    def intervals(self) -> list[tuple[int, int]]:
        return [(low(e), high(e)) for e in self.edges]

    @property
    def interval_set(self) -> frozenset[tuple[int, int]]:
        cached = self.__dict__.get("_interval_set_cache")
        if cached is None:
            cached = frozenset(self.intervals)
            object.__setattr__(self, "_interval_set_cache", cached)
        return cached


def _canonical(n: int, masks: Iterable[int], cls: type[Hypergraph]) -> Hypergraph:
    all_masks = set(masks)
    all_masks.update(1 << (v - 1) for v in range(1, n + 1))
    return cls(n, tuple(sorted(all_masks, key=_edge_key)))


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > config.max_n():
        raise HypergraphError(f"n must be between 1 and {config.max_n()}, got {n!r}")


def make_hypergraph(n: int, edges: Iterable[Iterable[int]] = ()) -> Hypergraph:
    """Build a canonical hypergraph on ``[n]``.

    Singletons are inserted and duplicate edges collapsed. The result is an
    :class:`IntervalHypergraph` when every edge happens to be contiguous.
    """
    _check_n(n)
    masks = []
    for edge in edges:
        vs = list(edge)
        if not vs:
            raise HypergraphError("empty hyperedge")
        for v in vs:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise HypergraphError(f"vertex {v!r} out of range [1, {n}]")
        masks.append(mask_of(vs))
    cls = IntervalHypergraph if all(is_contiguous(m) for m in masks) else Hypergraph
    return _canonical(n, masks, cls)


def make_interval_hypergraph(n: int, intervals: Iterable[tuple[int, int]] = ()) -> IntervalHypergraph:
    _check_n(n)
    masks = []
    for lo, hi in intervals:
        if not 1 <= lo <= hi <= n:
            raise HypergraphError(f"interval [{lo},{hi}] not inside [1, {n}]")
        masks.append(interval_mask(lo, hi))
    return _canonical(n, masks, IntervalHypergraph)  # type: ignore[return-value]


def as_interval(H: Hypergraph) -> IntervalHypergraph | None:
    if isinstance(H, IntervalHypergraph):
        return H
    if all(is_contiguous(e) for e in H.edges):
        return IntervalHypergraph(H.n, H.edges)
    return None


def require_interval(H: Hypergraph) -> IntervalHypergraph:
    I = as_interval(H)
    if I is None:
        raise HypergraphError(f"{H.describe()} is not an interval hypergraph")
    return I


def reflect_vertex(n: int, x: int) -> int:
    return n - x + 1


def reflect_mask(n: int, mask: int) -> int:
    return mask_of(reflect_vertex(n, v) for v in vertices_of(mask))


def reflect(H: Hypergraph) -> Hypergraph:
    """Image of ``H`` under ``x -> n - x + 1``."""
    return _canonical(H.n, (reflect_mask(H.n, e) for e in H.edges), type(H))


def all_intervals(n: int) -> IntervalHypergraph:
    return make_interval_hypergraph(n, [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)])


def initial_intervals(n: int) -> IntervalHypergraph:
    return make_interval_hypergraph(n, [(1, j) for j in range(1, n + 1)])


def final_intervals(n: int) -> IntervalHypergraph:
    return make_interval_hypergraph(n, [(i, n) for i in range(1, n + 1)])


# ---------------------------------------------------------------------------
# predicates on interval hypergraphs


def intersection_closed(H: Hypergraph) -> bool:
    I = require_interval(H)
    present = I.interval_set
    ivs = I.intervals
    for (a, b), (c, d) in combinations(ivs, 2):
        lo, hi = max(a, c), min(b, d)
        if lo <= hi and (lo, hi) not in present:
            return False
    return True


def is_distributive_hypergraph(H: Hypergraph) -> bool:
    """Crossing edges meet in an edge that is initial or final in every edge containing it."""
    I = require_interval(H)
    present = I.interval_set
    ivs = I.intervals
    for (a, b), (c, d) in combinations(ivs, 2):
        lo, hi = max(a, c), min(b, d)
        if lo > hi:
            continue
        nested = (a <= c and d <= b) or (c <= a and b <= d)
        if nested:
            continue
        if (lo, hi) not in present:
            return False
        for e, f in ivs:
            if e <= lo and hi <= f and e != lo and f != hi:
                return False
    return True


def is_join_sd_hypergraph(H: Hypergraph) -> bool:
    """Intersection-closed, and every admissible ``[r,r'],[s,s'],[t,t'],[u,u']`` has a witness.

    Admissible means ``r < s <= r' < s'``, ``r < t <= s' < t'``, ``u < min(s, t)``
    and ``s' < u'``. A witness is an edge ``[v,v']`` with ``v < s`` and
    ``s' <= v' < t'``. The witness may end exactly at ``s'``; requiring ``s' < v'``
    would reject the full interval hypergraph on ``[4]``, whose lattice is
    semidistributive.
    """
    I = require_interval(H)
    if not intersection_closed(I):
        return False
    ivs = I.intervals
    for s, s2 in ivs:
        for t, t2 in ivs:
            if not (t <= s2 < t2):
                continue
            m = min(s, t)
            # r < min(s, t) already gives r < s and r < t
            if not any(r < m and s <= r2 < s2 for r, r2 in ivs):
                continue
            if not any(u < m and s2 < u2 for u, u2 in ivs):
                continue
            if not any(v < s and s2 <= v2 < t2 for v, v2 in ivs):
                return False
    return True


def is_meet_sd_hypergraph(H: Hypergraph) -> bool:
    return is_join_sd_hypergraph(reflect(require_interval(H)))


def initial_subinterval_closed(H: Hypergraph) -> bool:
    I = require_interval(H)
    present = I.interval_set
    return all((i, j) in present for i, k in I.intervals for j in range(i + 1, k))


def final_subinterval_closed(H: Hypergraph) -> bool:
    I = require_interval(H)
    present = I.interval_set
    return all((j, k) in present for i, k in I.intervals for j in range(i + 1, k))


def is_schroeder(H: Hypergraph) -> bool:
    """Every two edges are nested or disjoint."""
    edges = require_interval(H).edges
    for e, f in combinations(edges, 2):
        inter = e & f
        if inter and inter != e and inter != f:
            return False
    return True


@dataclass(frozen=True)
class SchroederTree:
    """Rooted plane tree; a node without children is a leaf.

    Leaves are labelled ``1..n`` from left to right when the hypergraph is built.
    """

    children: tuple["SchroederTree", ...] = ()

    @classmethod
    def leaf(cls) -> "SchroederTree":
        return cls(())

    @classmethod
    def node(cls, *children: "SchroederTree") -> "SchroederTree":
        return cls(tuple(children))

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return sum(c.leaf_count() for c in self.children)


def left_comb(n: int) -> SchroederTree:
    tree = SchroederTree.leaf()
    for _ in range(n - 1):
        tree = SchroederTree.node(tree, SchroederTree.leaf())
    return tree


def schroeder_hypergraph(tree: SchroederTree) -> IntervalHypergraph:
    """Singletons plus the leaf set of every internal node."""
    intervals: list[tuple[int, int]] = []

    def walk(node: SchroederTree, start: int) -> int:
        if node.is_leaf:
            return start
        if len(node.children) < 2:
            raise HypergraphError("internal node of a Schroeder tree needs at least two children")
        end = start - 1
        for child in node.children:
            end = walk(child, end + 1)
        intervals.append((start, end))
        return end

    n = walk(tree, 1)
    return make_interval_hypergraph(n, intervals)


def nonsingleton_intervals(n: int) -> list[tuple[int, int]]:
    return sorted((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def enumerate_interval_hypergraphs(n: int, *, max_n: int = config.EXHAUSTIVE_MAX_N) -> Iterator[IntervalHypergraph]:
    """All ``2 ** (n(n-1)/2)`` interval hypergraphs on ``[n]``.

    Subsets of the non-singleton intervals are visited in increasing bitmask order
    over the canonical interval order.
    """
    if n > max_n:
        raise HypergraphError(f"exhaustive enumeration is capped at n={max_n}, got n={n}")
    _check_n(n)
    pool: Sequence[tuple[int, int]] = nonsingleton_intervals(n)
    for bits in range(1 << len(pool)):
        chosen = [pool[k] for k in range(len(pool)) if bits >> k & 1]
        yield make_interval_hypergraph(n, chosen)
