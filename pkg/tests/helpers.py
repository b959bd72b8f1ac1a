"""Shared builders and hypothesis strategies."""

from hypothesis import strategies as st

from hyperlat.hypergraph import make_interval_hypergraph, nonsingleton_intervals
from hyperlat.io import parse_compact_hypergraph
from hyperlat.orientations import Orientation


def hg(compact: str):
    """``hg("4:123,134")``."""
    return parse_compact_hypergraph(compact)


def ori(H, *choice):
    return Orientation(H, tuple(choice))


@st.composite
def interval_hypergraphs(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    pool = nonsingleton_intervals(n)
    chosen = draw(st.lists(st.sampled_from(pool), unique=True)) if pool else []
    return make_interval_hypergraph(n, chosen)


@st.composite
def hypergraphs(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    subsets = st.frozensets(st.integers(1, n), min_size=2) if n >= 2 else st.nothing()
    edges = draw(st.lists(subsets, max_size=4)) if n >= 2 else []
    from hyperlat.hypergraph import make_hypergraph

    return make_hypergraph(n, [sorted(e) for e in edges])


def permutations_of(n):
    return st.permutations(list(range(1, n + 1))).map(tuple)
