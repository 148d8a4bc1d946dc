from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powersum_forge.polynomials import NEG_INFINITY, BivariatePoly, Polynomial

coeffs = st.dictionaries(st.integers(0, 8), st.fractions(max_denominator=50), max_size=6)


def test_zero_polynomial_degree_sentinel():
    zero = Polynomial.zero()
    assert zero.is_zero
    assert zero.degree == NEG_INFINITY
    assert zero.lowest_degree == NEG_INFINITY
    assert Polynomial({3: 0}).is_zero


def test_degree_and_coefficient_access():
    p = Polynomial({0: 1, 5: Fraction(-1, 2)})
    assert p.degree == 5
    assert p.lowest_degree == 0
    assert p.coefficient(5) == Fraction(-1, 2)
    assert p.coefficient(17) == 0


def test_construction_merges_duplicate_degrees():
    p = Polynomial([(2, 1), (2, 2), (0, 5)])
    assert p == Polynomial({2: 3, 0: 5})


def test_construction_rejects_negative_degree():
    with pytest.raises(ValueError):
        Polynomial({-1: 1})


def test_scalar_mixing():
    p = Polynomial({1: 2})
    assert p + 1 == Polynomial({0: 1, 1: 2})
    assert 1 + p == p + 1
    assert 3 - p == Polynomial({0: 3, 1: -2})
    assert Fraction(1, 2) * p == Polynomial({1: 1})
    assert p - p == 0
    assert p != 0


def test_power_and_evaluate():
    p = Polynomial({0: 1, 1: 1})  # 1 + x
    assert p**0 == Polynomial.constant(1)
    assert p**3 == Polynomial({0: 1, 1: 3, 2: 3, 3: 1})
    assert (p**3).evaluate(2) == 27
    assert p.evaluate(Fraction(1, 2)) == Fraction(3, 2)
    with pytest.raises(ValueError):
        p ** -1


def test_divmod_exact_and_with_remainder():
    num = Polynomial({4: 1, 0: -1})  # x^4 - 1
    den = Polynomial({1: 1, 0: -1})  # x - 1
    q, r = divmod(num, den)
    assert r.is_zero
    assert q == Polynomial({3: 1, 2: 1, 1: 1, 0: 1})
    q, r = divmod(Polynomial({2: 1, 0: 1}), Polynomial({1: 1}))
    assert q == Polynomial({1: 1}) and r == Polynomial({0: 1})
    with pytest.raises(ZeroDivisionError):
        divmod(num, Polynomial.zero())


@given(coeffs, coeffs)
def test_divmod_reconstruction(ca, cb):
    a, b = Polynomial(ca), Polynomial(cb)
    if b.is_zero:
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero or r.degree < b.degree


@given(coeffs, coeffs, st.integers(-5, 5))
def test_ring_homomorphism_under_evaluation(ca, cb, x):
    a, b = Polynomial(ca), Polynomial(cb)
    assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)


def test_polynomial_hash_consistency():
    assert hash(Polynomial({1: 2})) == hash(Polynomial([(1, 1), (1, 1)]))
    assert Polynomial({1: 2}) in {Polynomial({1: 2})}


def test_bivariate_basics():
    u = BivariatePoly.monomial(1, 0)
    v = BivariatePoly.monomial(0, 1)
    form = 3 * u * u + 2 * u * v - v * v
    assert form.coefficient(2, 0) == 3
    assert form.coefficient(1, 1) == 2
    assert form.coefficient(0, 2) == -1
    assert form.evaluate(1, 2) == 3 + 4 - 4
    assert (form - form).is_zero
    assert form**0 == BivariatePoly.monomial(0, 0)


def test_bivariate_rejects_negative_exponents():
    with pytest.raises(ValueError):
        BivariatePoly({(-1, 0): 1})


def test_bivariate_binomial_cube():
    # (u + v)^3 expands with binomial coefficients
    s = BivariatePoly.monomial(1, 0) + BivariatePoly.monomial(0, 1)
    cube = s**3
    assert cube == BivariatePoly({(3, 0): 1, (2, 1): 3, (1, 2): 3, (0, 3): 1})


@given(
    st.dictionaries(
        st.tuples(st.integers(0, 4), st.integers(0, 4)),
        st.fractions(max_denominator=20),
        max_size=5,
    ),
    st.integers(-4, 4),
    st.integers(-4, 4),
)
def test_bivariate_evaluation_homomorphism(cs, u, v):
    p = BivariatePoly(cs)
    q = p * p
    assert q.evaluate(u, v) == p.evaluate(u, v) ** 2
