"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from mptkit.graph import graph_from_edge_list
from mptkit.representations import MptRepresentation, random_mpt_rep


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edge_list(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def raw_reps(draw, max_n=10, span=12):
    """Arbitrary pointed intervals, possibly with repeated points."""
    n = draw(st.integers(0, max_n))
    items = []
    for _ in range(n):
        p = draw(st.integers(0, span))
        items.append((draw(st.integers(0, p)), p, draw(st.integers(p, span))))
    return MptRepresentation(tuple(items))


@st.composite
def canonical_reps(draw, max_n=14):
    return random_mpt_rep(draw(st.integers(0, max_n)), draw(st.integers(0, 10**6)))
