"""Finite posets and definitional lattice-property checks.

These are the brute-force oracles: every property is decided straight from its
defining identity over all pairs or triples of elements, with no structure theory.
"""

from __future__ import annotations

from functools import cached_property
from typing import Any, Hashable, Iterable, Sequence

import numpy as np

NONE = -1


class PosetError(ValueError):
    pass


class FinitePoset:
    """A partial order on ``range(m)``.

    ``leq[a, b]`` is true iff ``a <= b``. ``elements`` optionally carries the
    objects the indices stand for (orientations, permutations, ...).
    """

    def __init__(self, leq: np.ndarray, elements: Sequence[Hashable] | None = None,
                 labels: Sequence[str] | None = None):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise PosetError("order relation must be a square matrix")
        m = leq.shape[0]
        if not leq.diagonal().all():
            raise PosetError("relation is not reflexive")
        if (leq & leq.T & ~np.eye(m, dtype=bool)).any():
            raise PosetError("relation is not antisymmetric")
        if m and ((leq.astype(np.int32) @ leq.astype(np.int32) > 0) & ~leq).any():
            raise PosetError("relation is not transitive")
        leq.setflags(write=False)
        self.leq = leq
        self.m = m
        self.elements = tuple(elements) if elements is not None else tuple(range(m))
        if len(self.elements) != m:
            raise PosetError("one element object per index is required")
        if labels is None:
            labels = [str(e) for e in self.elements]
        self.labels = tuple(labels)
        self._index = {e: k for k, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return self.m

    def __repr__(self) -> str:
        return f"FinitePoset(m={self.m})"

    def index(self, element: Hashable) -> int:
        return self._index[element]

    def le(self, a: Any, b: Any) -> bool:
        """Compare two element objects."""
        return bool(self.leq[self._index[a], self._index[b]])

    # -- structure ---------------------------------------------------------

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        lt = self.leq & ~np.eye(self.m, dtype=bool)
        two_step = (lt.astype(np.int32) @ lt.astype(np.int32)) > 0
        return lt & ~two_step

    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges ``(a, b)`` with ``b`` covering ``a``, sorted."""
        a, b = np.nonzero(self.cover_matrix)
        return sorted(zip(a.tolist(), b.tolist()))

    def minimal_elements(self) -> list[int]:
        lt = self.leq & ~np.eye(self.m, dtype=bool)
        return [int(k) for k in np.nonzero(~lt.any(axis=0))[0]]

    def maximal_elements(self) -> list[int]:
        lt = self.leq & ~np.eye(self.m, dtype=bool)
        return [int(k) for k in np.nonzero(~lt.any(axis=1))[0]]

    def subposet(self, idx: Sequence[int]) -> "FinitePoset":
        idx = list(idx)
        sub = self.leq[np.ix_(idx, idx)] if idx else np.zeros((0, 0), dtype=bool)
        return FinitePoset(sub, [self.elements[k] for k in idx], [self.labels[k] for k in idx])

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.leq.T, self.elements, self.labels)

    # -- bounds -------------------------------------------------------------

    def _bound_table(self, leq: np.ndarray) -> np.ndarray:
        """Least upper bound of every pair for the order ``leq`` (``NONE`` if absent)."""
        m = self.m
        table = np.full((m, m), NONE, dtype=np.int64)
        if m == 0:
            return table
        upper = leq[:, None, :] & leq[None, :, :]            # upper[a, b, x]: a <= x and b <= x
        flat = upper.reshape(m * m, m).astype(np.int32)
        # x is least among the upper bounds when no upper bound y fails x <= y
        misses = flat @ (~leq).astype(np.int32).T           # misses[ab, x] = #{y in U : not x <= y}
        least = (misses == 0) & upper.reshape(m * m, m)
        has = least.any(axis=1)
        table.reshape(-1)[has] = least.argmax(axis=1)[has]
        return table

    @cached_property
    def join_table(self) -> np.ndarray:
        return self._bound_table(self.leq)

    @cached_property
    def meet_table(self) -> np.ndarray:
        return self._bound_table(self.leq.T)

    def join_of(self, a: int, b: int) -> int | None:
        v = int(self.join_table[a, b])
        return None if v == NONE else v

    def meet_of(self, a: int, b: int) -> int | None:
        v = int(self.meet_table[a, b])
        return None if v == NONE else v

    def is_lattice(self) -> bool:
        # pairwise joins and meets give all nonempty subsets; the empty set needs m >= 1
        return self.m > 0 and bool((self.join_table != NONE).all() and (self.meet_table != NONE).all())

    def _require_lattice(self) -> tuple[np.ndarray, np.ndarray]:
        if not self.is_lattice():
            raise PosetError("poset is not a lattice")
        return self.join_table, self.meet_table

    # -- lattice identities -------------------------------------------------

    def is_distributive(self) -> bool:
        J, M = self._require_lattice()
        a = np.arange(self.m)[:, None, None]
        b = np.arange(self.m)[None, :, None]
        c = np.arange(self.m)[None, None, :]
        lhs = J[a, M[b, c]]
        rhs = M[J[a, b], J[a, c]]
        if not (lhs == rhs).all():
            return False
        return bool((M[a, J[b, c]] == J[M[a, b], M[a, c]]).all())

    @staticmethod
    def _semidistributive(J: np.ndarray, M: np.ndarray) -> bool:
        m = J.shape[0]
        a = np.arange(m)[:, None, None]
        b = np.arange(m)[None, :, None]
        c = np.arange(m)[None, None, :]
        ab = J[a, b]
        premise = ab == J[a, c]
        conclusion = J[a, M[b, c]] == ab
        return bool((~premise | conclusion).all())

    def is_join_semidistributive(self) -> bool:
        J, M = self._require_lattice()
        return self._semidistributive(J, M)

    def is_meet_semidistributive(self) -> bool:
        J, M = self._require_lattice()
        return self._semidistributive(M, J)

    def join_irreducibles(self) -> list[int]:
        """Elements covering exactly one element."""
        self._require_lattice()
        return [int(k) for k in np.nonzero(self.cover_matrix.sum(axis=0) == 1)[0]]

    def meet_irreducibles(self) -> list[int]:
        self._require_lattice()
        return [int(k) for k in np.nonzero(self.cover_matrix.sum(axis=1) == 1)[0]]

    # -- chains and lower sets ----------------------------------------------

    def is_disjoint_union_of_chains(self) -> bool:
        """Comparability is transitive, so its classes are chains."""
        comp = self.leq | self.leq.T
        if self.m == 0:
            return True
        step = (comp.astype(np.int32) @ comp.astype(np.int32)) > 0
        return bool((~step | comp).all())

    def lower_sets(self) -> list[frozenset[int]]:
        """Every down-closed subset, each exactly once."""
        order = _topological_order(self.leq)
        below = [frozenset(int(x) for x in np.nonzero(self.leq[:, k])[0] if x != k) for k in range(self.m)]
        out: list[frozenset[int]] = []

        def extend(pos: int, current: frozenset[int]) -> None:
            if pos == len(order):
                out.append(current)
                return
            x = order[pos]
            extend(pos + 1, current)
            if below[x] <= current:
                extend(pos + 1, current | {x})

        extend(0, frozenset())
        return out


def _topological_order(leq: np.ndarray) -> list[int]:
    # number of strict predecessors is a linear extension key
    return sorted(range(leq.shape[0]), key=lambda k: (int(leq[:, k].sum()), k))


def from_relation(m: int, pairs: Iterable[tuple[int, int]], elements: Sequence[Hashable] | None = None,
                  labels: Sequence[str] | None = None) -> FinitePoset:
    """Reflexive-transitive closure of ``pairs`` (``a <= b``) on ``range(m)``."""
    rel = np.eye(m, dtype=bool)
    for a, b in pairs:
        if not (0 <= a < m and 0 <= b < m):
            raise PosetError(f"pair {(a, b)} out of range")
        rel[a, b] = True
    for k in range(m):
        rel |= rel[:, k, None] & rel[None, k, :]
    if (rel & rel.T & ~np.eye(m, dtype=bool)).any():
        raise PosetError("relation has a cycle")
    return FinitePoset(rel, elements, labels)


def chain(k: int) -> FinitePoset:
    return from_relation(k, [(x, x + 1) for x in range(k - 1)])


def antichain(k: int) -> FinitePoset:
    return from_relation(k, [])


def boolean_lattice(atoms: int) -> FinitePoset:
    m = 1 << atoms
    leq = np.array([[a & b == a for b in range(m)] for a in range(m)], dtype=bool)
    return FinitePoset(leq)


def lower_set_lattice(P: FinitePoset) -> FinitePoset:
    """Inclusion order on the lower sets of ``P``."""
    sets = P.lower_sets()
    leq = np.array([[s <= t for t in sets] for s in sets], dtype=bool)
    return FinitePoset(leq, sets, ["{" + ",".join(P.labels[x] for x in sorted(s)) + "}" for s in sets])
