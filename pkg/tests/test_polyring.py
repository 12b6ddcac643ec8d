import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cifano.errors import ParameterError
from cifano.exactmath import binom
from cifano.polyring import HomogPoly, ideal_plane_bases, monomials_lex


def random_form(rng, nvars, degree, p, density=0.7):
    return HomogPoly(nvars, degree, p,
                     {mu: rng.randrange(p) for mu in monomials_lex(nvars, degree)
                      if rng.random() < density})


def test_monomials_lex_examples():
    assert monomials_lex(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials_lex(2, 4)) == 5
    assert monomials_lex(3, 0) == [(0, 0, 0)]
    with pytest.raises(ParameterError):
        monomials_lex(2, -1)


def test_monomials_lex_grid():
    for nvars in range(1, 7):
        for degree in range(0, 9):
            mons = monomials_lex(nvars, degree)
            assert len(mons) == binom(degree + nvars - 1, nvars - 1)
            assert all(a > b for a, b in zip(mons, mons[1:]))
            assert all(sum(mu) == degree for mu in mons)


def test_ideal_bases_counts():
    ideal, square = ideal_plane_bases(4, 3, 1)
    assert len(ideal) == 30
    brute = sum(1 for mu in itertools.product(range(5), repeat=4)
                if sum(mu) == 4 and mu[2] + mu[3] >= 2)
    assert len(square) == brute == 22
    ideal, _ = ideal_plane_bases(1, 2, 1)
    assert ideal == [(0, 0, 1)]
    with pytest.raises(ParameterError):
        ideal_plane_bases(2, 2, 2)


@pytest.mark.parametrize("m,k,d", [(3, 1, 4), (4, 2, 3), (5, 1, 2), (6, 3, 5)])
def test_square_ideal_formula(m, k, d):
    _, square = ideal_plane_bases(d, m, k)
    assert len(square) == binom(d + m, m) - binom(d + k, k) - (m - k) * binom(d - 1 + k, k)


def test_canonical_storage_drops_zeros():
    f = HomogPoly(2, 1, 5, {(1, 0): 5, (0, 1): 7})
    assert f.coeffs == {(0, 1): 2}
    with pytest.raises(ParameterError):
        HomogPoly(2, 2, 5, {(1, 0): 1})


def test_render():
    f = HomogPoly(3, 4, 7, {(3, 0, 1): 2, (0, 4, 0): 6})
    assert f.render() == "2*y0^3*y2 + 6*y1^4"
    assert HomogPoly.zero(3, 4, 7).render() == "0"


def test_substitute_examples():
    p = 7
    y = [HomogPoly.variable(j, 4, p) for j in range(4)]
    line = [[1, 0, 0, 0], [0, 1, 0, 0]]
    assert y[2].substitute_linear(line).is_zero()
    assert y[0].substitute_linear(line) == HomogPoly.variable(0, 2, p)
    g = y[0] * y[2] + y[1] * y[3]
    B = [[1, 0, 0, -1], [0, 1, 1, 0]]       # points (a, b, b, -a)
    assert g.substitute_linear(B).is_zero()
    with pytest.raises(ParameterError):
        g.substitute_linear([[1, 0, 0, 0], [2, 0, 0, 0]])


def test_partial_derivative_examples():
    p = 5
    y0 = HomogPoly.variable(0, 3, p)
    assert (y0 * y0).partial_derivative(0) == y0 * 2
    assert (y0 ** p).partial_derivative(0).is_zero()
    y1 = HomogPoly.variable(1, 3, p)
    assert (y0 * y1).partial_derivative(2).is_zero()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([5, 7, 101]), st.integers(1, 4),
       st.integers(1, 3))
def test_substitution_is_composition(seed, p, degree, k):
    rng = random.Random(seed)
    m = k + rng.randrange(1, 3)
    g = random_form(rng, m + 1, degree, p)
    h = random_form(rng, m + 1, 2, p)
    while True:
        B = np.array([[rng.randrange(p) for _ in range(m + 1)] for _ in range(k + 1)])
        try:
            gb = g.substitute_linear(B)
            break
        except ParameterError:
            continue
    for _ in range(5):
        z = [rng.randrange(p) for _ in range(k + 1)]
        y = np.array(z) @ B % p
        assert gb.evaluate(z) == g.evaluate(y)
    assert (g * h).substitute_linear(B) == gb * h.substitute_linear(B)
    g2 = random_form(rng, m + 1, degree, p)
    assert (g + g2 * 3).substitute_linear(B) == gb + g2.substitute_linear(B) * 3


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([5, 7, 101]), st.integers(1, 6))
def test_euler_relation(seed, p, degree):
    rng = random.Random(seed)
    nvars = rng.randrange(2, 5)
    g = random_form(rng, nvars, degree, p)
    total = HomogPoly.zero(nvars, degree, p)
    for j in range(nvars):
        total = total + HomogPoly.variable(j, nvars, p) * g.partial_derivative(j)
    assert total == g * degree
    if degree % p == 0:
        assert total.is_zero()


def test_evaluate_many_agrees_with_evaluate():
    rng = random.Random(3)
    g = random_form(rng, 3, 4, 11)
    pts = np.array([[rng.randrange(11) for _ in range(3)] for _ in range(50)])
    assert g.evaluate_many(pts).tolist() == [g.evaluate(pt) for pt in pts]


def test_coefficient_vector_roundtrip():
    rng = random.Random(9)
    g = random_form(rng, 3, 3, 13)
    assert HomogPoly.from_vector(g.coefficient_vector(), 3, 3, 13) == g
