"""Lattice theory of interval hypergraphic posets.

Builds the poset on acyclic orientations, evaluates joins and meets in closed form,
constructs the join irreducible orientations from their index sets, and tests
whether the surjection from the weak order respects meets or joins.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Callable, Iterable, Sequence

import numpy as np

from .hypergraph import (
    Hypergraph,
    HypergraphError,
    IntervalHypergraph,
    as_interval,
    high,
    interval_mask,
    intersection_closed,
    is_distributive_hypergraph,
    low,
    reflect,
    require_interval,
)
from .orientations import (
    Orientation,
    bottom_orientation,
    enumerate_acyclic,
    increasing_flip_targets,
    reflect_orientation,
    vertex_poset,
)
from .poset import FinitePoset, from_relation
from .weak_order import (
    Permutation,
    all_permutations,
    fiber_bounds,
    orient,
    weak_join,
    weak_leq,
    weak_meet,
)


# ---------------------------------------------------------------------------
# the poset


@lru_cache(maxsize=2048)
def acyclic_orientations(H: Hypergraph) -> tuple[Orientation, ...]:
    return tuple(enumerate_acyclic(H))


def leq_source(A: Orientation, B: Orientation) -> bool:
    """Componentwise comparison of sources, which is the order of interval posets."""
    require_interval(A.hypergraph)
    if A.hypergraph != B.hypergraph:
        raise HypergraphError("orientations of different hypergraphs")
    return all(a <= b for a, b in zip(A.choice, B.choice))


def flip_graph(H: Hypergraph) -> tuple[tuple[Orientation, ...], list[tuple[int, int, int, int]]]:
    """Acyclic orientations and increasing flip arcs ``(source, target, i, j)`` by index."""
    elems = acyclic_orientations(H)
    index = {O: k for k, O in enumerate(elems)}
    arcs = []
    for k, A in enumerate(elems):
        for i, j, B in increasing_flip_targets(A):
            arcs.append((k, index[B], i, j))
    return elems, arcs


@lru_cache(maxsize=2048)
def poset_of(H: Hypergraph, via: str = "auto") -> FinitePoset:
    """The hypergraphic poset on acyclic orientations.

    ``via="flips"`` takes the transitive closure of increasing flips (works for any
    hypergraph); ``via="sources"`` compares sources componentwise (interval
    hypergraphs only). ``"auto"`` picks sources when ``H`` is an interval hypergraph.
    """
    if via == "auto":
        via = "sources" if as_interval(H) is not None else "flips"
    if via == "flips":
        elems, arcs = flip_graph(H)
        return from_relation(len(elems), [(a, b) for a, b, _, _ in arcs], elems)
    if via == "sources":
        require_interval(H)
        elems = acyclic_orientations(H)
        if not H.nonsingletons:
            return FinitePoset(np.ones((1, 1), dtype=bool), elems)
        arr = np.array([O.choice for O in elems], dtype=np.int64)
        leq = (arr[:, None, :] <= arr[None, :, :]).all(axis=2)
        return FinitePoset(leq, elems)
    raise ValueError(f"unknown construction {via!r}")


@dataclass(frozen=True)
class OrderEquivalences:
    """Four ways of asking whether ``A <= B``; they agree on intersection-closed inputs."""

    flip_order: bool
    source_order: bool
    fiber_bounds: bool
    vertex_orders: bool

    def agree(self) -> bool:
        return len({self.flip_order, self.source_order, self.fiber_bounds, self.vertex_orders}) == 1


def order_equivalences(A: Orientation, B: Orientation, *, strict: bool = True) -> OrderEquivalences:
    """Evaluate flip reachability, source comparison, ``min fiber(A) <= max fiber(B)``,
    and "``j`` below ``i`` for ``A`` forbids ``i`` below ``j`` for ``B``" (``i < j``).

    With ``strict`` the hypergraph must be closed under intersection.
    """
    H = A.hypergraph
    I = require_interval(H)
    if strict and not intersection_closed(I):
        raise HypergraphError(f"{I.describe()} is not closed under intersection")
    P = poset_of(H, "flips")
    lo_a, _ = fiber_bounds(A)
    _, hi_b = fiber_bounds(B)
    VA, VB = vertex_poset(A), vertex_poset(B)
    n = H.n
    cond_d = all(
        not (VA.lt(j, i) and VB.lt(i, j))
        for i in range(1, n + 1) for j in range(i + 1, n + 1)
    )
    return OrderEquivalences(P.le(A, B), leq_source(A, B), weak_leq(lo_a, hi_b), cond_d)


# ---------------------------------------------------------------------------
# joins and meets


def _require_closed(H: Hypergraph) -> IntervalHypergraph:
    I = require_interval(H)
    if not _closed(I):
        raise HypergraphError(f"{I.describe()} is not closed under intersection")
    return I


@lru_cache(maxsize=4096)
def _closed(I: Hypergraph) -> bool:
    return intersection_closed(I)


def _segments_by_source(A: Orientation) -> list[int]:
    """``seg[v]`` = union of ``[min J, A(J)[`` over edges ``J`` sourced at ``v``."""
    seg = [0] * (A.hypergraph.n + 1)
    for src, e in A.pairs():
        seg[src] |= interval_mask(low(e), src - 1)
    return seg


def _join_unchecked(H: Hypergraph, orients: Sequence[Orientation]) -> Orientation:
    n = H.n
    seg = [0] * (n + 1)
    for A in orients:
        for v, s in enumerate(_segments_by_source(A)):
            seg[v] |= s
    choice = []
    for e in H.nonsingletons:
        forbidden = 0
        for v in range(low(e), high(e) + 1):
            forbidden |= seg[v]
        free = e & ~forbidden
        if not free:
            raise HypergraphError("join formula produced an empty choice; hypergraph not intersection-closed?")
        choice.append(low(free))
    return Orientation(H, tuple(choice))


def hyp_join(orients: Iterable[Orientation]) -> Orientation:
    """Join of acyclic orientations of an intersection-closed interval hypergraph.

    In each edge ``I`` the join picks the smallest vertex of ``I`` outside every
    half-open ``[min J, A_p(J)[`` with ``A_p(J)`` in ``I``.
    """
    orients = list(orients)
    if not orients:
        raise ValueError("join of an empty family is not defined here")
    H = orients[0].hypergraph
    if any(O.hypergraph != H for O in orients):
        raise HypergraphError("orientations of different hypergraphs")
    _require_closed(H)
    return _join_unchecked(H, orients)


def hyp_meet(orients: Iterable[Orientation]) -> Orientation:
    """Meet, as the reflection of the join of the reflected orientations."""
    orients = list(orients)
    if not orients:
        raise ValueError("meet of an empty family is not defined here")
    _require_closed(orients[0].hypergraph)
    return reflect_orientation(hyp_join([reflect_orientation(O) for O in orients]))


def _choice_keys(H: Hypergraph, choices: np.ndarray) -> np.ndarray:
    radix = H.n + 1
    keys = np.zeros(choices.shape[:-1], dtype=np.int64)
    for k in range(choices.shape[-1]):
        keys = keys * radix + choices[..., k]
    return keys


def formula_join_table(H: Hypergraph) -> np.ndarray:
    """Pairwise joins of all acyclic orientations by the closed formula, as indices.

    Vectorized form of :func:`hyp_join` over every pair at once.
    """
    I = _require_closed(H)
    elems = acyclic_orientations(I)
    m = len(elems)
    if not I.nonsingletons:
        return np.zeros((m, m), dtype=np.int64)
    seg = np.array([_segments_by_source(A)[1:] for A in elems], dtype=np.int64)   # (m, n)
    both = seg[:, None, :] | seg[None, :, :]                                       # (m, m, n)
    choices = np.empty((m, m, len(I.nonsingletons)), dtype=np.int64)
    for k, e in enumerate(I.nonsingletons):
        forbidden = np.bitwise_or.reduce(both[:, :, low(e) - 1:high(e)], axis=2)
        free = e & ~forbidden
        if (free == 0).any():
            raise HypergraphError("join formula produced an empty choice")
        lowest = free & -free
        choices[:, :, k] = np.log2(lowest).astype(np.int64) + 1
    keys = np.array([_choice_keys(I, np.array(A.choice)) for A in elems], dtype=np.int64)
    found = _choice_keys(I, choices)
    pos = np.searchsorted(keys, found)
    if (pos >= m).any() or (keys[np.minimum(pos, m - 1)] != found).any():
        raise HypergraphError("join formula left the set of acyclic orientations")
    return pos


def formula_meet_table(H: Hypergraph) -> np.ndarray:
    """Pairwise meets, via the join table of the reflected hypergraph."""
    I = _require_closed(H)
    elems = acyclic_orientations(I)
    R = reflect(I)
    relems = acyclic_orientations(R)
    rindex = {O: k for k, O in enumerate(relems)}
    to_r = np.array([rindex[reflect_orientation(A)] for A in elems], dtype=np.int64)
    back = np.empty(len(relems), dtype=np.int64)
    back[to_r] = np.arange(len(elems))
    rj = formula_join_table(R)
    return back[rj[to_r[:, None], to_r[None, :]]]


def hyp_join_via_weak_order(A: Orientation, B: Orientation) -> Orientation:
    """``orient(min fiber(A) v min fiber(B))``."""
    _require_closed(A.hypergraph)
    return orient(weak_join(fiber_bounds(A)[0], fiber_bounds(B)[0]), A.hypergraph)


def hyp_meet_via_weak_order(A: Orientation, B: Orientation) -> Orientation:
    _require_closed(A.hypergraph)
    return orient(weak_meet(fiber_bounds(A)[1], fiber_bounds(B)[1]), A.hypergraph)


# ---------------------------------------------------------------------------
# join irreducibles


def cycle_permutation(n: int, start: int, j: int) -> Permutation:
    """Identity with ``j`` moved just before ``start``."""
    rest = [v for v in range(1, n + 1) if v != j]
    pos = rest.index(start)
    return tuple(rest[:pos] + [j] + rest[pos:])


@dataclass(frozen=True)
class SingleIndex:
    """A vertex ``j`` that is a non-minimal element of some edge, with the smallest
    such edge ``[lo, hi]`` (the intersection of all edges having ``j`` as a non-minimum)."""

    j: int
    lo: int
    hi: int

    @property
    def span(self) -> tuple[int, int]:
        return (self.lo, self.hi)


@dataclass(frozen=True)
class PairIndex:
    """A pair ``i < j`` indexing one join irreducible; ``[lo, hi]`` is the smallest
    edge containing both."""

    i: int
    j: int
    lo: int
    hi: int

    @property
    def span(self) -> tuple[int, int]:
        return (self.lo, self.hi)


def single_indices(H: Hypergraph) -> list[SingleIndex]:
    I = _require_closed(H)
    out = []
    for j in range(1, I.n + 1):
        spans = [(a, b) for a, b in I.intervals if a < j <= b]
        if spans:
            out.append(SingleIndex(j, max(a for a, _ in spans), min(b for _, b in spans)))
    return out


def _single_index(H: Hypergraph, j: int) -> SingleIndex:
    for idx in single_indices(H):
        if idx.j == j:
            return idx
    raise HypergraphError(f"{j} is not a non-minimal vertex of any edge")


def single_index_orientation(H: Hypergraph, j: int | SingleIndex) -> Orientation:
    """``j`` becomes the source of each edge containing it that starts at ``lo``; other edges keep their minimum."""
    idx = j if isinstance(j, SingleIndex) else _single_index(H, j)
    jv = idx.j
    choice = tuple(
        jv if e >> (jv - 1) & 1 and low(e) == idx.lo else low(e)
        for e in H.nonsingletons
    )
    return Orientation(H, choice)


def single_precedes(a: SingleIndex, b: SingleIndex) -> bool:
    return a.span == b.span and a.j <= b.j


def _pair_span(I: IntervalHypergraph, i: int, j: int) -> tuple[int, int] | None:
    spans = [(a, b) for a, b in I.intervals if a <= i and j <= b]
    if not spans:
        return None
    return max(a for a, _ in spans), min(b for _, b in spans)


def pair_indices(H: Hypergraph) -> list[PairIndex]:
    """Pairs ``(i, j)`` where ``i`` is the largest vertex of ``[lo, j[`` not a
    non-minimal element of an edge inside ``[lo, j[``."""
    I = _require_closed(H)
    out = []
    for j in range(1, I.n + 1):
        for i in range(1, j):
            span = _pair_span(I, i, j)
            if span is None:
                continue
            lo, hi = span
            window = interval_mask(lo, j - 1)
            covered = 0
            for e in I.edges:
                if e & ~window == 0:
                    covered |= e & ~(1 << (low(e) - 1))
            remaining = window & ~covered
            if remaining and high(remaining) == i:
                out.append(PairIndex(i, j, lo, hi))
    out.sort(key=lambda p: (p.j - p.i, p.i))
    return out


def pair_index_orientation(H: Hypergraph, idx: PairIndex | tuple[int, int]) -> Orientation:
    """``j`` becomes the source of each edge containing it that starts at or after ``lo``."""
    if not isinstance(idx, PairIndex):
        i, j = idx
        found = [p for p in pair_indices(H) if (p.i, p.j) == (i, j)]
        if not found:
            raise HypergraphError(f"({i},{j}) is not a pair index of {H.describe()}")
        idx = found[0]
    jv = idx.j
    choice = tuple(
        jv if e >> (jv - 1) & 1 and low(e) >= idx.lo else low(e)
        for e in H.nonsingletons
    )
    return Orientation(H, choice)


def pair_precedes(a: PairIndex, b: PairIndex) -> bool:
    """``j <= l``, ``l`` in the span of ``a``, and ``a`` starts no earlier than ``b``.

    Necessary for ``A_a <= A_b`` but not sufficient: on ``{12,23,1234}`` the pair
    ``(1,3)`` precedes ``(1,4)`` while the orientations are incomparable. Use
    :func:`pair_index_leq` for the exact comparison.
    """
    return a.j <= b.j and a.lo <= b.j <= a.hi and a.lo >= b.lo


def pair_index_leq(H: Hypergraph, a: PairIndex, b: PairIndex) -> bool:
    """Exact order between the irreducibles of two pair indices.

    Each edge whose source ``a`` moves up to ``a.j`` must also have its source moved
    by ``b``, since otherwise ``b`` leaves it at the minimum.
    """
    if a.j > b.j:
        return False
    for e in H.nonsingletons:
        if e >> (a.j - 1) & 1 and a.lo <= low(e) < a.j:
            if not (e >> (b.j - 1) & 1 and low(e) >= b.lo):
                return False
    return True


def single_index_poset(H: Hypergraph) -> FinitePoset:
    idx = single_indices(H)
    leq = np.array([[single_precedes(a, b) for b in idx] for a in idx], dtype=bool).reshape(len(idx), len(idx))
    return FinitePoset(leq, idx, [str(x.j) for x in idx])


def distributive_bijection(H: Hypergraph) -> tuple[Callable[[Orientation], frozenset[int]],
                                                      Callable[[Iterable[int]], Orientation]]:
    """Maps between acyclic orientations and lower sets of the single-index order.

    ``phi(A)`` collects the ``j`` whose irreducible lies below ``A``; ``psi(X)`` joins
    the irreducibles indexed by ``X`` (the bottom orientation for empty ``X``).
    """
    I = _require_closed(H)
    if not is_distributive_hypergraph(I):
        raise HypergraphError(f"{I.describe()} is not distributive")
    irr = {idx.j: single_index_orientation(I, idx) for idx in single_indices(I)}

    def phi(A: Orientation) -> frozenset[int]:
        return frozenset(j for j, Aj in irr.items() if leq_source(Aj, A))

    def psi(X: Iterable[int]) -> Orientation:
        X = list(X)
        if not X:
            return bottom_orientation(I)
        return hyp_join([irr[x] for x in X])

    return phi, psi


# ---------------------------------------------------------------------------
# semilattice morphisms from the weak order


@lru_cache(maxsize=8)
def _weak_table(n: int, which: str) -> np.ndarray:
    perms = all_permutations(n)
    index = {p: k for k, p in enumerate(perms)}
    op = weak_meet if which == "meet" else weak_join
    m = len(perms)
    table = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        table[a, a] = a
        for b in range(a + 1, m):
            table[a, b] = table[b, a] = index[op(perms[a], perms[b])]
    table.setflags(write=False)
    return table


def _morphism(H: Hypergraph, which: str, samples: int | None, seed: int | None) -> bool:
    I = require_interval(H)
    P = poset_of(I)
    if not P.is_lattice():
        raise HypergraphError(f"the poset of {I.describe()} is not a lattice")
    lattice = P.meet_table if which == "meet" else P.join_table
    image = permutation_images(I)
    if samples is None:
        weak = _weak_table(I.n, which)
        return bool((image[weak] == lattice[image[:, None], image[None, :]]).all())
    rng = random.Random(seed)
    perms = all_permutations(I.n)
    weak_op = weak_meet if which == "meet" else weak_join
    index = {p: k for k, p in enumerate(perms)}
    for _ in range(samples):
        a, b = rng.randrange(len(perms)), rng.randrange(len(perms))
        if image[index[weak_op(perms[a], perms[b])]] != lattice[image[a], image[b]]:
            return False
    return True


def permutation_images(H: Hypergraph) -> np.ndarray:
    """``image[k]`` is the index of ``orient(perms[k], H)`` among the acyclic orientations."""
    elems = acyclic_orientations(H)
    index = {O: k for k, O in enumerate(elems)}
    return np.array([index[orient(p, H)] for p in all_permutations(H.n)], dtype=np.int64)


def is_meet_semilattice_morphism(H: Hypergraph, *, samples: int | None = None, seed: int | None = None) -> bool:
    """Whether ``orient(s ^ t) = orient(s) ^ orient(t)`` for all permutation pairs.

    Exhaustive over all ``n!**2`` pairs, or ``samples`` random pairs drawn with ``seed``.
    """
    return _morphism(H, "meet", samples, seed)


def is_join_semilattice_morphism(H: Hypergraph, *, samples: int | None = None, seed: int | None = None) -> bool:
    return _morphism(H, "join", samples, seed)


def catalan(k: int) -> int:
    c = 1
    for x in range(k):
        c = c * 2 * (2 * x + 1) // (x + 2)
    return c


def product(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b, values, 1)


__all__ = [
    "OrderEquivalences",
    "PairIndex",
    "SingleIndex",
    "acyclic_orientations",
    "catalan",
    "cycle_permutation",
    "distributive_bijection",
    "flip_graph",
    "formula_join_table",
    "formula_meet_table",
    "hyp_join",
    "hyp_join_via_weak_order",
    "hyp_meet",
    "hyp_meet_via_weak_order",
    "is_join_semilattice_morphism",
    "is_meet_semilattice_morphism",
    "leq_source",
    "order_equivalences",
    "pair_index_leq",
    "pair_index_orientation",
    "pair_indices",
    "pair_precedes",
    "permutation_images",
    "poset_of",
    "single_index_orientation",
    "single_index_poset",
    "single_indices",
    "single_precedes",
]
