"""Exhaustive cross-checks of the lattice characterizations against brute-force oracles.

Each instance yields a :class:`RunReport`: one :class:`Check` per property, pairing the
definitional (oracle) value with the value predicted by the hypergraph-level criterion.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from . import config
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    as_interval,
    enumerate_interval_hypergraphs,
    final_subinterval_closed,
    initial_subinterval_closed,
    intersection_closed,
    is_distributive_hypergraph,
    is_join_sd_hypergraph,
    is_meet_sd_hypergraph,
)
from .hyperlattice import (
    _weak_table,
    acyclic_orientations,
    catalan,
    distributive_bijection,
    formula_join_table,
    formula_meet_table,
    is_join_semilattice_morphism,
    is_meet_semilattice_morphism,
    pair_index_leq,
    pair_index_orientation,
    pair_indices,
    pair_precedes,
    permutation_images,
    poset_of,
    product,
    single_index_orientation,
    single_index_poset,
    single_indices,
)
from .orientations import increasing_flip_targets, is_cover, vertex_poset
from .weak_order import all_permutations, avoids_pattern, fiber, fiber_bounds

ALL_CHECKS = (
    "lattice",
    "distributive",
    "join-semidistributive",
    "meet-semidistributive",
    "source-order",
    "covers",
    "fibers",
    "order-equivalence",
    "join-formula",
    "meet-formula",
    "join-irreducibles",
    "extra-irreducible",
    "distributive-bijection",
    "meet-morphism",
    "join-morphism",
    "tamari-product",
)
LATTICE_CHECKS = ("lattice", "distributive", "join-semidistributive", "meet-semidistributive")
MORPHISM_CHECKS = ("meet-morphism", "join-morphism")


@dataclass(frozen=True)
class Check:
    name: str
    oracle: Any
    characterization: Any
    match: bool

    def to_obj(self) -> dict:
        return {"name": self.name, "oracle": self.oracle,
                "characterization": self.characterization, "match": self.match}


@dataclass
class RunReport:
    instance: str
    checks: list[Check] = field(default_factory=list)
    ms: float | None = None

    @property
    def ok(self) -> bool:
        return all(c.match for c in self.checks)

    def mismatches(self) -> list[Check]:
        return [c for c in self.checks if not c.match]

    def to_obj(self) -> dict:
        return {"instance": self.instance, "checks": [c.to_obj() for c in self.checks], "ms": self.ms}


def _agree(name: str, oracle: Any, characterization: Any) -> Check:
    return Check(name, oracle, characterization, oracle == characterization)


# ---------------------------------------------------------------------------
# per-permutation data shared across instances


@lru_cache(maxsize=8)
def _inversion_masks(n: int) -> np.ndarray:
    """Inversion set of every permutation as a bitmask over pairs ``(b, a)``."""
    out = []
    for p in all_permutations(n):
        m = 0
        for x in range(n):
            for y in range(x + 1, n):
                if p[x] > p[y]:
                    m |= 1 << ((p[x] - 1) * n + (p[y] - 1))
        out.append(m)
    return np.array(out, dtype=np.int64)


@lru_cache(maxsize=8)
def _perm_index(n: int) -> dict:
    return {p: k for k, p in enumerate(all_permutations(n))}


# ---------------------------------------------------------------------------
# individual checks


def _cover_check(I: Hypergraph, P) -> Check:
    """Oracle: Hasse edges of the flip poset. Characterization: legal flips passing :func:`is_cover`."""
    hasse = set(P.covers())
    predicted = set()
    for A in acyclic_orientations(I):
        for i, j, B in increasing_flip_targets(A):
            if is_cover(A, i, j):
                predicted.add((P.index(A), P.index(B)))
    return Check("covers", len(hasse), len(predicted), hasse == predicted)


def _fiber_check(I: Hypergraph) -> Check:
    n = I.n
    perms = all_permutations(n)
    pidx = _perm_index(n)
    inv = _inversion_masks(n)
    image = permutation_images(I)
    ok = True
    total = 0
    for k, A in enumerate(acyclic_orientations(I)):
        members = fiber(A)
        total += len(members)
        preimage = [perms[x] for x in np.nonzero(image == k)[0]]
        lo, hi = fiber_bounds(A)
        ilo, ihi = inv[pidx[lo]], inv[pidx[hi]]
        between = [perms[x] for x in np.nonzero(((ilo & ~inv) == 0) & ((inv & ~ihi) == 0))[0]]
        if not (sorted(members) == preimage == between):
            ok = False
        if not (avoids_pattern(lo, (2, 3, 1)) and avoids_pattern(hi, (2, 1, 3))):
            ok = False
    return Check("fibers", factorial(n), total, ok and total == factorial(n))


def _order_equivalence_check(I: Hypergraph) -> Check:
    n = I.n
    elems = acyclic_orientations(I)
    pidx = _perm_index(n)
    inv = _inversion_masks(n)
    lo_inv = np.empty(len(elems), dtype=np.int64)
    hi_inv = np.empty(len(elems), dtype=np.int64)
    down = np.zeros(len(elems), dtype=np.int64)  # pairs i < j with j below i
    up = np.zeros(len(elems), dtype=np.int64)    # pairs i < j with i below j
    for k, A in enumerate(elems):
        lo, hi = fiber_bounds(A)
        lo_inv[k], hi_inv[k] = inv[pidx[lo]], inv[pidx[hi]]
        V = vertex_poset(A)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                bit = 1 << ((i - 1) * n + (j - 1))
                if V.lt(j, i):
                    down[k] |= bit
                if V.lt(i, j):
                    up[k] |= bit
    a = poset_of(I, "flips").leq
    b = poset_of(I, "sources").leq
    c = (lo_inv[:, None] & ~hi_inv[None, :]) == 0
    d = (down[:, None] & up[None, :]) == 0
    agree = (a == b) & (a == c) & (a == d)
    return Check("order-equivalence", int(a.size), int(agree.sum()), bool(agree.all()))


def _lattice_op_check(I: Hypergraph, which: str) -> Check:
    P = poset_of(I)
    oracle = P.join_table if which == "join" else P.meet_table
    formula = formula_join_table(I) if which == "join" else formula_meet_table(I)
    # weak-order route: join of fiber minima, or meet of fiber maxima
    n = I.n
    pidx = _perm_index(n)
    image = permutation_images(I)
    ends = np.array([pidx[fiber_bounds(A)[0 if which == "join" else 1]] for A in P.elements], dtype=np.int64)
    weak = _weak_table(n, which)
    route = image[weak[ends[:, None], ends[None, :]]]
    agree = (formula == oracle) & (route == oracle)
    return Check(f"{which}-formula", int(oracle.size), int(agree.sum()), bool(agree.all()))


def _irreducible_check(I: Hypergraph) -> Check:
    P = poset_of(I)
    ji = set(P.join_irreducibles())
    pairs = pair_indices(I)
    built = [P.index(pair_index_orientation(I, p)) for p in pairs]
    ok = set(built) == ji and len(set(built)) == len(built)
    for x, p in zip(built, pairs):
        for y, q in zip(built, pairs):
            below = bool(P.leq[x, y])
            # the exact criterion must agree; the stated precedence is only implied
            if pair_index_leq(I, p, q) != below or (below and not pair_precedes(p, q)):
                ok = False
    singles = {P.index(single_index_orientation(I, s)) for s in single_indices(I)}
    ok = ok and singles <= ji
    return Check("join-irreducibles", len(ji), len(pairs), ok and len(ji) == len(pairs))


def _extra_irreducible_check(I: Hypergraph) -> Check:
    P = poset_of(I)
    singles = [P.index(single_index_orientation(I, s)) for s in single_indices(I)]
    extra = any(not any(P.leq[x, y] for y in singles) for x in P.join_irreducibles())
    return _agree("extra-irreducible", extra, not is_distributive_hypergraph(I))


def _distributive_bijection_check(I: Hypergraph) -> Check:
    P = poset_of(I)
    phi, psi = distributive_bijection(I)
    Q = single_index_poset(I)
    lower = [frozenset(Q.elements[k].j for k in L) for L in Q.lower_sets()]
    lower_set = set(lower)
    ok = all(phi(A) in lower_set and psi(phi(A)) == A for A in P.elements)
    ok = ok and all(phi(psi(L)) == L for L in lower)
    ok = ok and Q.is_disjoint_union_of_chains()
    ji = P.subposet(P.join_irreducibles())
    ok = ok and ji.is_disjoint_union_of_chains()
    chains = _component_sizes(Q)
    ok = ok and product(c + 1 for c in chains) == P.m
    return Check("distributive-bijection", P.m, len(lower), ok and P.m == len(lower))


def _component_sizes(Q) -> list[int]:
    comp = Q.leq | Q.leq.T
    seen: set[int] = set()
    sizes = []
    for k in range(Q.m):
        if k not in seen:
            cls = {int(x) for x in np.nonzero(comp[k])[0]}
            seen |= cls
            sizes.append(len(cls))
    return sizes


def maximal_intervals(I: Hypergraph) -> list[tuple[int, int]]:
    ivs = as_interval(I).intervals
    return [(a, b) for a, b in ivs
            if not any(c <= a and b <= d and (c, d) != (a, b) for c, d in ivs)]


def tamari_product_applies(I: Hypergraph) -> bool:
    """Subinterval-closed with maximal intervals pairwise sharing at most one vertex."""
    if not (initial_subinterval_closed(I) and final_subinterval_closed(I)):
        return False
    mx = maximal_intervals(I)
    return all(min(b, d) <= max(a, c) for x, (a, b) in enumerate(mx) for (c, d) in mx[x + 1:])


def tamari_product_size(I: Hypergraph) -> int:
    return product(catalan(b - a + 1) for a, b in maximal_intervals(I))


# ---------------------------------------------------------------------------
# driver


def check_instance(H: Hypergraph, *, checks: Sequence[str] = ALL_CHECKS, samples: int | None = None,
                   seed: int | None = None, timing: bool = False) -> RunReport:
    """Run the selected checks that apply to ``H``.

    Interval-only criteria are skipped for general hypergraphs, lattice-only checks
    for intervals not closed under intersection. ``samples`` switches the morphism
    checks to random pairs.
    """
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    start = time.perf_counter()
    report = RunReport(H.describe())
    I = as_interval(H)
    P = poset_of(H, "flips")
    lattice = P.is_lattice()
    want = set(checks)
    if I is None:
        raise HypergraphError(f"{H.describe()} is not an interval hypergraph; no criteria apply")

    if "lattice" in want:
        report.checks.append(_agree("lattice", lattice, intersection_closed(I)))
    if "distributive" in want:
        report.checks.append(_agree("distributive", lattice and P.is_distributive(), is_distributive_hypergraph(I)))
    if "join-semidistributive" in want:
        report.checks.append(_agree("join-semidistributive", lattice and P.is_join_semidistributive(),
                                    is_join_sd_hypergraph(I)))
    if "meet-semidistributive" in want:
        report.checks.append(_agree("meet-semidistributive", lattice and P.is_meet_semidistributive(),
                                    is_meet_sd_hypergraph(I)))
    if "source-order" in want:
        S = poset_of(I, "sources")
        report.checks.append(Check("source-order", int(P.leq.sum()), int(S.leq.sum()),
                                   bool((P.leq == S.leq).all())))
    if "covers" in want:
        report.checks.append(_cover_check(I, P))
    if "fibers" in want:
        report.checks.append(_fiber_check(I))

    if lattice and intersection_closed(I):
        if "order-equivalence" in want:
            report.checks.append(_order_equivalence_check(I))
        if "join-formula" in want:
            report.checks.append(_lattice_op_check(I, "join"))
        if "meet-formula" in want:
            report.checks.append(_lattice_op_check(I, "meet"))
        if "join-irreducibles" in want:
            report.checks.append(_irreducible_check(I))
        if "extra-irreducible" in want:
            report.checks.append(_extra_irreducible_check(I))
        if "distributive-bijection" in want and is_distributive_hypergraph(I):
            report.checks.append(_distributive_bijection_check(I))
        if "meet-morphism" in want:
            report.checks.append(_agree("meet-morphism", is_meet_semilattice_morphism(I, samples=samples, seed=seed),
                                        initial_subinterval_closed(I)))
        if "join-morphism" in want:
            report.checks.append(_agree("join-morphism", is_join_semilattice_morphism(I, samples=samples, seed=seed),
                                        final_subinterval_closed(I)))
        if "tamari-product" in want and tamari_product_applies(I):
            report.checks.append(_agree("tamari-product", P.m, tamari_product_size(I)))

    if timing:
        report.ms = round((time.perf_counter() - start) * 1000, 3)
    return report


def _worker(args: tuple) -> RunReport:
    H, checks, samples, seed, timing = args
    return check_instance(H, checks=checks, samples=samples, seed=seed, timing=timing)


def run_verify(nmax: int, *, nmin: int | None = None, jobs: int = 1, checks: Sequence[str] = ALL_CHECKS,
               seed: int | None = None, samples: int | None = None, allow_large: bool = False,
               timing: bool = False) -> Iterator[RunReport]:
    """Check every interval hypergraph on ``[n]`` for ``nmin <= n <= nmax``, in enumeration order.

    ``nmin`` defaults to ``nmax``, so ``run_verify(4)`` covers the 64 instances on ``[4]``.

    ``n`` above the exhaustive bound needs ``allow_large`` (or ``HYPERLAT_MAX_N``, which
    replaces the bound). With a ``seed`` but no
    ``samples`` the morphism checks sample 2000 pairs.
    """
    bound = config.EXHAUSTIVE_HARD_MAX_N if allow_large else config.EXHAUSTIVE_MAX_N
    if os.environ.get("HYPERLAT_MAX_N") is not None:
        bound = config.max_n()
    if nmax > bound:
        raise HypergraphError(
            f"--nmax {nmax} exceeds the exhaustive bound {bound}"
            + ("" if allow_large else " (use --allow-large for 6)")
        )
    if nmin is None:
        nmin = nmax
    if seed is not None and samples is None:
        samples = 2000
    instances: Iterable[Hypergraph] = (
        I for n in range(nmin, nmax + 1) for I in enumerate_interval_hypergraphs(n, max_n=bound)
    )
    tasks = ((I, tuple(checks), samples, seed, timing) for I in instances)
    if jobs <= 1:
        yield from map(_worker, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_worker, tasks, chunksize=16)


__all__ = [
    "ALL_CHECKS",
    "MORPHISM_CHECKS",
    "LATTICE_CHECKS",
    "Check",
    "RunReport",
    "check_instance",
    "maximal_intervals",
    "run_verify",
    "tamari_product_applies",
    "tamari_product_size",
]
