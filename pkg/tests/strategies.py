"""Hypothesis strategies for small graphs."""

from itertools import combinations

from hypothesis import strategies as st

from c4spectra.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = set(chosen)
    if connected:
        # a random spanning tree keeps everything connected
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))
