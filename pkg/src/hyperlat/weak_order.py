"""Permutations under the weak order and the surjection onto acyclic orientations.

Permutations are plain tuples in one-line notation, e.g. ``(4, 1, 3, 2)``.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

from .hypergraph import Hypergraph, require_interval
from .orientations import Orientation, OrientationError, vertex_poset

Permutation = tuple[int, ...]
InversionSet = frozenset[tuple[int, int]]


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if "," in text:
        perm = tuple(int(x) for x in text.split(","))
    elif text.isdigit():
        perm = tuple(int(c) for c in text)
    else:
        raise ValueError(f"malformed permutation {text!r}")
    check_permutation(perm)
    return perm


def format_permutation(perm: Sequence[int]) -> str:
    if len(perm) <= 9:
        return "".join(map(str, perm))
    return ",".join(map(str, perm))


def check_permutation(perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{tuple(perm)} is not a permutation of [1, {len(perm)}]")


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def all_permutations(n: int) -> list[Permutation]:
    return list(permutations(range(1, n + 1)))


def inversions(perm: Sequence[int]) -> InversionSet:
    """Pairs ``(b, a)`` with ``a < b`` and ``b`` written before ``a``."""
    out = set()
    for x in range(len(perm)):
        b = perm[x]
        for y in range(x + 1, len(perm)):
            if perm[y] < b:
                out.add((b, perm[y]))
    return frozenset(out)


def from_inversions(n: int, inv: Iterable[tuple[int, int]]) -> Permutation:
    """The permutation with inversion set ``inv``.

    Greedy build: repeatedly place the smallest value whose required predecessors are
    placed. Raises ``ValueError`` when ``inv`` is not the inversion set of a permutation.
    """
    inv = frozenset(inv)
    before = [0] * (n + 1)  # bitmask of values that must precede v
    for b, a in inv:
        if not 1 <= a < b <= n:
            raise ValueError(f"bad inversion {(b, a)}")
        before[a] |= 1 << b
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if (b, a) not in inv:
                before[b] |= 1 << a
    placed = 0
    out = []
    for _ in range(n):
        for v in range(1, n + 1):
            if not placed >> v & 1 and before[v] & ~placed == 0:
                out.append(v)
                placed |= 1 << v
                break
        else:
            raise ValueError("inversion set is not transitive")
    perm = tuple(out)
    if inversions(perm) != inv:
        raise ValueError("inversion set is not the inversion set of a permutation")
    return perm


def weak_leq(sigma: Sequence[int], tau: Sequence[int]) -> bool:
    return inversions(sigma) <= inversions(tau)


def _closure(n: int, pairs: set[tuple[int, int]]) -> set[tuple[int, int]]:
    succ = [0] * (n + 1)
    for b, a in pairs:
        succ[b] |= 1 << a
    for k in range(1, n + 1):
        for v in range(1, n + 1):
            if succ[v] >> k & 1:
                succ[v] |= succ[k]
    return {(b, a) for b in range(1, n + 1) for a in range(1, n + 1) if succ[b] >> a & 1}


def weak_join(sigma: Sequence[int], tau: Sequence[int]) -> Permutation:
    """Join in the weak order: inversion set is the transitive closure of the union."""
    if len(sigma) != len(tau):
        raise ValueError("permutations of different sizes")
    n = len(sigma)
    closed = _closure(n, set(inversions(sigma)) | set(inversions(tau)))
    # a transitive relation built from inversion sets only relates b > a
    assert all(b > a for b, a in closed), "closure lost antisymmetry"
    return from_inversions(n, closed)


def complement(perm: Sequence[int]) -> Permutation:
    """Value reversal ``v -> n + 1 - v``, an order-reversing involution of the weak order."""
    n = len(perm)
    return tuple(n + 1 - v for v in perm)


def weak_meet(sigma: Sequence[int], tau: Sequence[int]) -> Permutation:
    return complement(weak_join(complement(sigma), complement(tau)))


def orient(perm: Sequence[int], H: Hypergraph) -> Orientation:
    """In each edge, the member written first in ``perm``."""
    if len(perm) != H.n:
        raise ValueError(f"permutation of size {len(perm)} for a hypergraph on [{H.n}]")
    pos = [0] * (H.n + 1)
    for p, v in enumerate(perm):
        pos[v] = p
    choice = []
    for e in H.nonsingletons:
        best = None
        v = 1
        m = e
        while m:
            if m & 1 and (best is None or pos[v] < pos[best]):
                best = v
            m >>= 1
            v += 1
        choice.append(best)
    return Orientation(H, tuple(choice))


def linear_extensions(n: int, up: Sequence[int]) -> list[Permutation]:
    """Linear extensions of the order whose up-sets (bitmasks over ``[n]``) are ``up``.

    Backtracks over minimal elements in increasing order, so output is lexicographic.
    """
    below = [0] * n
    for v in range(n):
        for w in range(n):
            if v != w and up[v] >> w & 1:
                below[w] |= 1 << v
    out: list[Permutation] = []
    word: list[int] = []

    def extend(placed: int) -> None:
        if len(word) == n:
            out.append(tuple(word))
            return
        for v in range(n):
            if not placed >> v & 1 and below[v] & ~placed == 0:
                word.append(v + 1)
                extend(placed | 1 << v)
                word.pop()

    extend(0)
    return out


def fiber(A: Orientation) -> list[Permutation]:
    """All permutations mapped to ``A``: the linear extensions of its vertex order."""
    P = vertex_poset(A)
    return linear_extensions(P.n, P.up)


def fiber_bounds(A: Orientation) -> tuple[Permutation, Permutation]:
    """Minimum and maximum of the fiber of ``A`` in the weak order (interval hypergraphs)."""
    require_interval(A.hypergraph)
    P = vertex_poset(A)
    n = P.n
    low_inv = {(b, a) for a in range(1, n + 1) for b in range(a + 1, n + 1) if P.lt(b, a)}
    high_inv = {(b, a) for a in range(1, n + 1) for b in range(a + 1, n + 1) if not P.lt(a, b)}
    return from_inversions(n, low_inv), from_inversions(n, high_inv)


def avoids_pattern(perm: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff no subsequence of ``perm`` is order-isomorphic to ``pattern``."""
    k = len(pattern)
    n = len(perm)
    order = sorted(range(k), key=lambda x: pattern[x])

    def search(start: int, picked: list[int]) -> bool:
        if len(picked) == k:
            vals = [perm[p] for p in picked]
            return all(vals[order[x]] < vals[order[x + 1]] for x in range(k - 1))
        for p in range(start, n - (k - len(picked)) + 1):
            picked.append(p)
            if search(p + 1, picked):
                return True
            picked.pop()
        return False

    return not search(0, [])


def fiber_from_bounds(A: Orientation) -> list[Permutation]:
    """The weak-order interval between the fiber bounds, listed lexicographically."""
    lo, hi = fiber_bounds(A)
    inv_lo, inv_hi = inversions(lo), inversions(hi)
    return [p for p in all_permutations(A.hypergraph.n) if inv_lo <= inversions(p) <= inv_hi]


__all__ = [
    "InversionSet",
    "OrientationError",
    "Permutation",
    "all_permutations",
    "avoids_pattern",
    "check_permutation",
    "complement",
    "fiber",
    "fiber_bounds",
    "fiber_from_bounds",
    "format_permutation",
    "from_inversions",
    "identity",
    "inversions",
    "linear_extensions",
    "longest",
    "orient",
    "parse_permutation",
    "weak_join",
    "weak_leq",
    "weak_meet",
]
