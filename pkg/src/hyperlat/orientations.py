"""Orientations of hypergraphs, acyclicity, flips and the induced vertex order."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .hypergraph import (
    Hypergraph,
    HypergraphError,
    as_interval,
    high,
    interval_mask,
    low,
    reflect,
    reflect_mask,
    reflect_vertex,
    require_interval,
    vertices_of,
)


class OrientationError(ValueError):
    pass


@dataclass(frozen=True)
class Orientation:
    """A choice of source in every non-singleton edge (singletons are forced).

    ``choice[k]`` is the source of ``hypergraph.nonsingletons[k]``, so the tuple is
    exactly the display form ``(1,4,3,4)``.
    """

    hypergraph: Hypergraph
    choice: tuple[int, ...]

    def __post_init__(self) -> None:
        edges = self.hypergraph.nonsingletons
        if len(self.choice) != len(edges):
            raise OrientationError(
                f"expected {len(edges)} sources for {self.hypergraph.describe()}, got {len(self.choice)}"
            )
        for v, e in zip(self.choice, edges):
            if not (isinstance(v, int) and v >= 1 and e >> (v - 1) & 1):
                raise OrientationError(f"source {v!r} is not a vertex of edge {vertices_of(e)}")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.choice)) + ")"

    def source(self, edge: int) -> int:
        """Source of ``edge`` (a bitmask), singletons included."""
        if not edge & (edge - 1):
            return low(edge)
        return self.choice[self.hypergraph.nonsingletons.index(edge)]

    def pairs(self) -> list[tuple[int, int]]:
        """``(source, edge mask)`` for the non-singleton edges."""
        return list(zip(self.choice, self.hypergraph.nonsingletons))


def parse_orientation(H: Hypergraph, text: str) -> Orientation:
    body = text.strip()
    if not re.fullmatch(r"\(\s*(\d+\s*(,\s*\d+\s*)*)?\)", body):
        raise OrientationError(f"malformed orientation {text!r}; expected e.g. (1,4,3,4)")
    inner = body[1:-1].strip()
    values = tuple(int(x) for x in inner.split(",")) if inner else ()
    return Orientation(H, values)


def bottom_orientation(H: Hypergraph) -> Orientation:
    return Orientation(H, tuple(low(e) for e in H.nonsingletons))


def top_orientation(H: Hypergraph) -> Orientation:
    return Orientation(H, tuple(high(e) for e in H.nonsingletons))


# ---------------------------------------------------------------------------
# acyclicity


def _has_cycle(succ: list[list[int]]) -> bool:
    """Iterative three-colour DFS."""
    WHITE, GREY, BLACK = 0, 1, 2
    colour = [WHITE] * len(succ)
    for root in range(len(succ)):
        if colour[root] != WHITE:
            continue
        colour[root] = GREY
        stack = [(root, iter(succ[root]))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[node] = BLACK
                stack.pop()
            elif colour[nxt] == GREY:
                return True
            elif colour[nxt] == WHITE:
                colour[nxt] = GREY
                stack.append((nxt, iter(succ[nxt])))
    return False


def is_acyclic(O: Orientation) -> bool:
    """No directed cycle in the edge digraph with ``H -> H'`` when ``O(H')`` lies in ``H - O(H)``."""
    pairs = O.pairs()
    succ = []
    for src, e in pairs:
        body = e & ~(1 << (src - 1))
        succ.append([k for k, (src2, _) in enumerate(pairs) if body >> (src2 - 1) & 1])
    return not _has_cycle(succ)


def _two_cycle(src1: int, e1: int, src2: int, e2: int) -> bool:
    return src1 != src2 and bool(e2 >> (src1 - 1) & 1) and bool(e1 >> (src2 - 1) & 1)


def is_acyclic_interval(O: Orientation) -> bool:
    """Pairwise pattern test, valid for interval hypergraphs only."""
    require_interval(O.hypergraph)
    pairs = O.pairs()
    for a in range(len(pairs)):
        s1, e1 = pairs[a]
        for b in range(a + 1, len(pairs)):
            if _two_cycle(s1, e1, *pairs[b]):
                return False
    return True


def enumerate_acyclic(H: Hypergraph) -> list[Orientation]:
    """All acyclic orientations in lexicographic order of their choice tuples."""
    edges = H.nonsingletons
    options = [vertices_of(e) for e in edges]
    interval = as_interval(H) is not None
    out: list[Orientation] = []
    chosen: list[int] = []

    def extend(k: int) -> None:
        if k == len(edges):
            O = Orientation(H, tuple(chosen))
            if interval or is_acyclic(O):
                out.append(O)
            return
        e = edges[k]
        for v in options[k]:
            # a 2-cycle is a cycle for any hypergraph; for intervals it is the only obstruction
            if any(_two_cycle(v, e, chosen[m], edges[m]) for m in range(k)):
                continue
            chosen.append(v)
            extend(k + 1)
            chosen.pop()

    extend(0)
    return out


# ---------------------------------------------------------------------------
# flips


def flip(A: Orientation, i: int, j: int) -> Orientation:
    """Move the source from ``i`` to ``j`` in every edge containing both whose source is ``i``."""
    both = (1 << (i - 1)) | (1 << (j - 1))
    new = tuple(
        j if src == i and e & both == both else src
        for src, e in A.pairs()
    )
    return Orientation(A.hypergraph, new)


def increasing_flip_targets(A: Orientation) -> list[tuple[int, int, Orientation]]:
    """Every acyclic ``flip(A, i, j) != A`` with ``i < j``."""
    if not is_acyclic(A):
        raise OrientationError(f"{A} is cyclic")
    n = A.hypergraph.n
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            B = flip(A, i, j)
            if B != A and is_acyclic(B):
                out.append((i, j, B))
    return out


def reflect_orientation(A: Orientation) -> Orientation:
    """The orientation of ``reflect(H)`` with every source reflected."""
    H = A.hypergraph
    R = reflect(H)
    n = H.n
    by_edge = {reflect_mask(n, e): reflect_vertex(n, s) for s, e in A.pairs()}
    return Orientation(R, tuple(by_edge[e] for e in R.nonsingletons))


def decreasing_flip_targets(A: Orientation) -> list[tuple[int, int, Orientation]]:
    """Acyclic flips moving a source from ``i`` down to ``j < i``, obtained by reflection."""
    n = A.hypergraph.n
    out = []
    for i, j, B in increasing_flip_targets(reflect_orientation(A)):
        out.append((reflect_vertex(n, i), reflect_vertex(n, j), reflect_orientation(B)))
    out.sort(key=lambda t: (t[0], t[1]))
    return out


def _flip_data(A: Orientation, i: int) -> int:
    """``max{max(I) : A(I) = i}`` over all edges, singletons included."""
    k = i
    for src, e in A.pairs():
        if src == i:
            k = max(k, high(e))
    return k


def flip_is_legal_interval(A: Orientation, i: int, j: int) -> bool:
    """Whether ``i -> j`` (``i < j``) is a non-trivial flip to an acyclic orientation.

    On interval hypergraphs this only inspects ``A``: with ``k`` the largest right end
    of an edge sourced at ``i``, the flip is legal iff no edge ``J`` has ``j`` in
    ``J - A(J)`` while ``A(J)`` lies in ``]i, k]``.
    """
    require_interval(A.hypergraph)
    if not i < j:
        raise OrientationError("increasing flips need i < j")
    if flip(A, i, j) == A:
        return False
    k = _flip_data(A, i)
    for src, e in A.pairs():
        if src != j and e >> (j - 1) & 1 and i < src <= k:
            return False
    return True


def is_cover(A: Orientation, i: int, j: int) -> bool:
    """Whether the legal flip ``i -> j`` is a cover relation of the interval poset.

    It is one iff every ``l`` strictly between ``i`` and ``j`` is a non-source vertex
    of an edge sourced in ``]i, j]`` or of an edge sourced at ``i`` that misses ``j``.
    The second kind matters: flipping ``i`` to ``l`` would also move such an edge,
    which ``i -> j`` leaves alone, so no orientation strictly between arises that way.
    """
    if not flip_is_legal_interval(A, i, j):
        raise OrientationError(f"{i} -> {j} is not a legal flip from {A}")
    covered = 0
    for src, e in A.pairs():
        if i < src <= j or (src == i and not e >> (j - 1) & 1):
            covered |= e & ~(1 << (src - 1))
    gap = interval_mask(i + 1, j - 1)
    return gap & ~covered == 0


# ---------------------------------------------------------------------------
# vertex order and coordinates


@dataclass(frozen=True)
class VertexPoset:
    """Order on ``[n]``; ``up[v - 1]`` is the bitmask of all ``w`` with ``v <= w``."""

    n: int
    up: tuple[int, ...]

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a - 1] >> (b - 1) & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def down(self, v: int) -> int:
        return sum(1 << (w - 1) for w in range(1, self.n + 1) if self.up[w - 1] >> (v - 1) & 1)

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(1, self.n + 1) for b in vertices_of(self.up[a - 1]) if a != b]

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(a, b) for b in range(1, self.n + 1)] for a in range(1, self.n + 1)]


def vertex_poset(A: Orientation) -> VertexPoset:
    """Transitive closure of ``A(H) < h`` for ``h`` in ``H - A(H)``."""
    n = A.hypergraph.n
    up = [1 << v for v in range(n)]
    for src, e in A.pairs():
        up[src - 1] |= e
    # Warshall on bit rows
    for k in range(n):
        bit = 1 << k
        row = up[k]
        for v in range(n):
            if up[v] & bit:
                up[v] |= row
    for v in range(n):
        for w in range(v + 1, n):
            if up[v] >> w & 1 and up[w] >> v & 1:
                raise OrientationError(f"{A} is cyclic; the vertex relation is not antisymmetric")
    return VertexPoset(n, tuple(up))


def vertex_coordinates(O: Orientation) -> tuple[int, ...]:
    """Vertex of the Minkowski sum picked by ``O``: entry ``i`` counts the edges sourced at ``i``."""
    coords = [1] * O.hypergraph.n  # singletons
    for src in O.choice:
        coords[src - 1] += 1
    return tuple(coords)


def orientations_from(H: Hypergraph, tuples: Iterable[Iterable[int]]) -> list[Orientation]:
    return [Orientation(H, tuple(t)) for t in tuples]


__all__ = [
    "HypergraphError",
    "Orientation",
    "OrientationError",
    "VertexPoset",
    "bottom_orientation",
    "decreasing_flip_targets",
    "enumerate_acyclic",
    "flip",
    "flip_is_legal_interval",
    "increasing_flip_targets",
    "is_acyclic",
    "is_acyclic_interval",
    "is_cover",
    "orientations_from",
    "parse_orientation",
    "reflect_orientation",
    "top_orientation",
    "vertex_coordinates",
    "vertex_poset",
]
