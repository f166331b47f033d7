from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from c4spectra.errors import InvalidInputError, InvalidParameterError
from c4spectra.graph import (
    Graph,
    bridges,
    build_delta_n2_bicyclic,
    build_delta_n2_unicyclic,
    build_extremal,
    build_named,
    complete,
    copies,
    creates_c4,
    cyclomatic_number,
    cycle,
    is_c4_free,
    is_k_cyclic,
    join,
    path,
    star,
    union,
)
from strategies import graphs


def has_c4_brute(g):
    for quad in combinations(range(g.n), 4):
        for a, b, c, d in permutations(quad):
            if a == min(quad) and b < d and all(g.has_edge(x, y) for x, y in ((a, b), (b, c), (c, d), (d, a))):
                return True
    return False


def test_extremal_small_case():
    g = build_extremal(5, 1)
    assert g.m == 5
    assert g.degree_sequence() == [4, 2, 2, 1, 1]
    assert is_c4_free(g)
    assert is_k_cyclic(g, 1)


@pytest.mark.parametrize("n,k", [(4, 1), (7, 2), (10, 3), (9, 4), (21, 10)])
def test_extremal_shape(n, k):
    g = build_extremal(n, k)
    assert g.m == n + k - 1
    assert g.degrees[0] == n - 1
    assert sorted(g.degrees[1:]) == [1] * (n - 2 * k - 1) + [2] * (2 * k)
    assert is_c4_free(g) and is_k_cyclic(g, k)


@pytest.mark.parametrize("n,k", [(4, 2), (2, 1), (5, 0)])
def test_extremal_rejects(n, k):
    with pytest.raises(InvalidParameterError):
        build_extremal(n, k)


@pytest.mark.parametrize("n", range(6, 12))
@pytest.mark.parametrize("variant", "AB")
def test_unicyclic_variants(n, variant):
    g = build_delta_n2_unicyclic(n, variant)
    assert g.max_degree == n - 2
    assert is_k_cyclic(g, 1) and is_c4_free(g)


@pytest.mark.parametrize("n", range(8, 12))
@pytest.mark.parametrize("variant", "AB")
def test_bicyclic_variants(n, variant):
    g = build_delta_n2_bicyclic(n, variant)
    assert g.max_degree == n - 2
    assert is_k_cyclic(g, 2) and is_c4_free(g)


def test_variant_errors():
    with pytest.raises(InvalidParameterError):
        build_delta_n2_unicyclic(5, "A")
    with pytest.raises(InvalidParameterError):
        build_delta_n2_bicyclic(7, "A")
    with pytest.raises(InvalidParameterError):
        build_delta_n2_unicyclic(6, "C")


def test_named_families():
    assert build_named("path", 4).degree_sequence() == [2, 2, 1, 1]
    assert build_named("star", 5).degree_sequence() == [4, 1, 1, 1, 1]
    assert cycle(5).degree_sequence() == [2] * 5
    assert complete(4).m == 6
    with pytest.raises(InvalidParameterError):
        build_named("wheel", 5)
    with pytest.raises(InvalidParameterError):
        cycle(2)


def test_c4_examples():
    assert not is_c4_free(cycle(4))
    assert is_c4_free(cycle(5))
    assert not is_c4_free(complete(4))
    assert is_c4_free(star(6))


def test_invalid_inputs():
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(InvalidInputError):
        Graph(2, ((1,), ()))
    with pytest.raises(InvalidInputError):
        path(3).remove_edge(0, 2)
    with pytest.raises(InvalidInputError):
        path(3).relabel([0, 0, 1])


def test_algebra():
    g = union(complete(2), complete(1))
    assert (g.n, g.m) == (3, 1)
    assert join(complete(1), copies(complete(1), 4)).degree_sequence() == star(5).degree_sequence()
    assert cyclomatic_number(union(cycle(3), cycle(5))) == 2


def test_bridges():
    g = build_extremal(6, 1)
    # hub-to-pendant edges are bridges, the triangle edges are not
    assert bridges(g) == {(0, 3), (0, 4), (0, 5)}
    assert bridges(cycle(5)) == set()


@given(graphs(max_n=7))
def test_c4_free_matches_brute_force(g):
    assert is_c4_free(g) == (not has_c4_brute(g))


@given(graphs(max_n=7), st.data())
def test_creates_c4_agrees_with_recheck(g, data):
    if not is_c4_free(g):
        return
    non_edges = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    if not non_edges:
        return
    u, v = data.draw(st.sampled_from(non_edges))
    assert creates_c4(g, u, v) == (not is_c4_free(g.add_edge(u, v)))


@given(graphs(max_n=7))
def test_join_with_vertex_adds_hub(g):
    h = join(complete(1), g)
    assert h.degrees[0] == g.n
    assert h.m == g.m + g.n
    assert [d - 1 for d in h.degrees[1:]] == list(g.degrees)


@given(graphs(max_n=8), st.data())
def test_relabel_preserves_invariants(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    h = g.relabel(perm)
    assert h.degree_sequence() == g.degree_sequence()
    assert is_c4_free(h) == is_c4_free(g)
    assert len(h.components()) == len(g.components())
    assert h.is_bipartite() == g.is_bipartite()


@given(graphs(max_n=8))
def test_handshake_and_cyclomatic(g):
    assert sum(g.degrees) == 2 * g.m
    assert cyclomatic_number(g) >= 0
