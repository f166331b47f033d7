import networkx as nx
import pytest
from hypothesis import given, strategies as st

from c4spectra.canon import canonical_form, canonical_graph, equitable_partition, is_isomorphic
from c4spectra.errors import CapacityError
from c4spectra.graph import Graph, build_delta_n2_unicyclic, build_extremal, cycle, path, star
from strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@given(graphs(max_n=9), st.data())
def test_invariant_under_relabeling(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=7), graphs(max_n=7))
def test_agrees_with_networkx(g, h):
    if g.n != h.n or g.m != h.m:
        return
    assert (canonical_form(g) == canonical_form(h)) == nx.is_isomorphic(to_nx(g), to_nx(h))


@given(graphs(max_n=8))
def test_canonical_graph_is_fixed_point(g):
    c = canonical_graph(g)
    assert canonical_form(c) == canonical_form(g)
    assert canonical_graph(c) == c


def test_variants_are_distinct():
    a, b = (build_delta_n2_unicyclic(8, v) for v in "AB")
    assert not is_isomorphic(a, b)
    assert is_isomorphic(path(5), Graph.from_edges(5, [(3, 1), (1, 4), (4, 0), (0, 2)]))


def test_ceiling(monkeypatch):
    monkeypatch.setenv("C4SPECTRA_CANON_CEILING", "8")
    with pytest.raises(CapacityError):
        canonical_form(cycle(9))


def test_equitable_partition_examples():
    assert sorted(map(len, equitable_partition(star(5)))) == [1, 4]
    assert equitable_partition(cycle(6)) == [list(range(6))]
    assert sorted(map(len, equitable_partition(build_extremal(7, 2)))) == [1, 2, 4]


@given(graphs(max_n=8))
def test_partition_is_equitable(g):
    part = equitable_partition(g)
    for cls in part:
        for other in part:
            counts = {sum(1 for w in g.adj[v] if w in set(other)) for v in cls}
            assert len(counts) == 1
