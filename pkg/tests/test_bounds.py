import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from c4spectra.bounds import (
    Polynomial,
    charpoly,
    delta_plus_one_check,
    equality_class,
    largest_real_root,
    merris_bound,
    poly_F,
    poly_f2,
    poly_f3,
    poly_fk,
    thm31_bound,
)
from c4spectra.errors import InvalidInputError, InvalidParameterError, NoRootError, PreconditionError
from c4spectra.graph import Graph, build_delta_n2_unicyclic, build_extremal, complete, cycle, path, star, union
from c4spectra.spectral import q_index, signless_laplacian
from strategies import graphs


def numpy_root(p):
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    return max(r.real for r in roots if abs(r.imag) < 1e-9)


@pytest.mark.parametrize("n,k,text", [
    (5, 1, "x^3 - 8x^2 + 15x - 4"),
    (6, 1, "x^3 - 9x^2 + 18x - 4"),
    (8, 2, "x^3 - 11x^2 + 24x - 8"),
])
def test_cubic(n, k, text):
    assert str(poly_fk(n, k)) == text


def test_quintics_at_six():
    assert str(poly_f2(6)) == "x^5 - 11x^4 + 39x^3 - 53x^2 + 26x - 4"
    assert str(poly_f3(6)) == "x^5 - 11x^4 + 40x^3 - 58x^2 + 30x - 4"


@pytest.mark.parametrize("n", range(6, 40))
def test_quintic_difference(n):
    assert poly_f3(n) - poly_f2(n) == poly_F(n)
    assert str(poly_F(n)) == f"x^3 - {n - 1}x^2 + 4x"


def test_parameter_errors():
    with pytest.raises(InvalidParameterError):
        poly_fk(4, 2)
    with pytest.raises(InvalidParameterError):
        poly_f2(5)
    with pytest.raises(InvalidParameterError):
        thm31_bound(5, 2)


def test_charpoly_of_quotient():
    assert charpoly([[4, 2, 2], [1, 3, 0], [1, 0, 1]]) == poly_fk(5, 1)
    assert charpoly([[2, 1], [1, 2]]) == Polynomial((3, -4, 1))


@given(graphs(min_n=1, max_n=6))
def test_charpoly_matches_numpy(g):
    m = signless_laplacian(g).astype(int)
    ours = [float(c) for c in reversed(charpoly(m).coeffs)]
    assert np.allclose(ours, np.poly(m), atol=1e-6)


def test_root_examples():
    assert largest_real_root(poly_fk(5, 1), 5, 8, 1e-12) == pytest.approx(5.3234, abs=1e-4)
    assert largest_real_root(poly_fk(5, 1), 5, 8) == pytest.approx(q_index(build_extremal(5, 1)), abs=1e-10)
    assert largest_real_root(Polynomial((-1, 0, 1)), 0, 2, 1e-12) == pytest.approx(1.0, abs=1e-12)
    g2 = build_delta_n2_unicyclic(6, "B")
    assert largest_real_root(poly_f2(6), 5, 10, 1e-12) == pytest.approx(q_index(g2), abs=1e-8)


def test_root_errors():
    with pytest.raises(NoRootError):
        largest_real_root(Polynomial((1, 0, 1)), -3, 3)
    with pytest.raises(InvalidInputError):
        largest_real_root(Polynomial((-1, 1)), 2, 1)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5, unique=True))
def test_root_of_product_of_linears(roots):
    # simple roots only: a root of even multiplicity has no sign change
    p = Polynomial((1,))
    for r in roots:
        p = p * Polynomial((-r, 1))
    assert largest_real_root(p, -7.5, 7.5) == pytest.approx(max(roots), abs=1e-9)


@pytest.mark.parametrize("n,k,expected", [(6, 1, 6.2015), (8, 2, None), (4, 1, None)])
def test_thm31_bound(n, k, expected):
    value = thm31_bound(n, k)
    assert value > n
    assert value == pytest.approx(numpy_root(poly_fk(n, k)), abs=1e-10)
    assert value == pytest.approx(q_index(build_extremal(n, k)), abs=1e-9)
    if expected is not None:
        assert value == pytest.approx(expected, abs=1e-4)


@pytest.mark.parametrize("n", range(6, 61, 6))
def test_roots_increase_in_k(n):
    x = 1.7
    for k in range(1, (n - 2) // 2):
        assert poly_fk(n, k + 1)(x) == poly_fk(n, k)(x) - 4
        assert thm31_bound(n, k + 1) > thm31_bound(n, k)


def test_shift_expansion():
    p = poly_F(10)
    assert p.shift(9).coeffs == (36, 85, 18, 1)
    assert p.shift(Fraction(1, 2))(Fraction(3, 2)) == p(2)


def test_merris_examples():
    b = merris_bound(cycle(6))
    assert (b.value, b.equality_class) == (4.0, "regular")
    assert merris_bound(path(4)).value == 3.5
    assert q_index(path(4)) < 3.5
    b = merris_bound(star(5))
    assert (b.value, b.equality_class) == (5.0, "semiregular-bipartite")
    with pytest.raises(InvalidInputError):
        merris_bound(union(complete(2), complete(1)))


def test_equality_class():
    assert equality_class(complete(4)) == "regular"
    assert equality_class(path(4)) == "none"
    assert equality_class(cycle(5)) == "regular"


@given(graphs(min_n=2, max_n=8))
def test_merris_upper_bound(g):
    if g.min_degree == 0:
        return
    assert q_index(g) <= merris_bound(g).value + 1e-9


def test_delta_examples():
    d = delta_plus_one_check(star(7))
    assert d.q == pytest.approx(7) and d.q_equality and d.mu_equality
    d = delta_plus_one_check(build_extremal(6, 1))
    assert d.q > 6 + 1e-6 and not d.q_equality and d.mu_equality and d.mu == pytest.approx(6)
    d = delta_plus_one_check(path(5))
    assert d.q > 3 and not d.q_equality
    with pytest.raises(PreconditionError):
        delta_plus_one_check(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(PreconditionError):
        delta_plus_one_check(Graph.from_edges(1, []))


@given(graphs(min_n=2, max_n=8, connected=True))
def test_delta_lower_bounds(g):
    d = delta_plus_one_check(g)
    assert d.q_lower_ok and d.mu_lower_ok
    assert d.q_equality == d.q_equality_observed
    assert d.mu_equality == d.mu_equality_observed


@given(st.integers(6, 50), st.floats(0, 1, exclude_min=True))
def test_F_positive(n, t):
    x = (n - 1) + t * (n + 1)
    assert poly_F(n)(x) > 0
