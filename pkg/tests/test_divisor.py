from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from orlik.divisor import (Divisor, beta, chi_of, degree, delta, exponent_to_poly,
                           lambda_div, mul, poly_to_exponent, psi, tensor_exponent)
from orlik.errors import ValidationError
from orlik.polyarith import IntPolynomial, euler_phi, lcm

import oracles


def test_basis_elements():
    assert psi(6) == {6: 1}
    assert lambda_div(6) == {1: 1, 2: 1, 3: 1, 6: 1}
    assert lambda_div(1) == {1: 1}


def test_degrees():
    assert degree(lambda_div(12)) == 12
    assert degree(psi(12)) == 4
    assert degree(Divisor()) == 0


@pytest.mark.parametrize("m, n, b", [(12, 18, 1), (12, 30, 3), (3, 2, 1), (6, 6, 6)])
def test_beta(m, n, b):
    assert beta(m, n) == b


@pytest.mark.parametrize("m, n, l, d", [(3, 2, 6, 1), (3, 3, 1, 2), (3, 3, 3, 1), (2, 4, 4, 1)])
def test_delta(m, n, l, d):
    assert delta(m, n, l) == d


def test_products():
    assert psi(2) * psi(3) == {6: 1}
    assert psi(3) * psi(3) == {3: 1, 1: 2}
    assert lambda_div(2) * lambda_div(3) == lambda_div(6)


def test_tensor_exponent_examples():
    assert tensor_exponent({3: 1}, {2: 1, 3: 1}) == {1: 2, 3: 1, 6: 1}
    assert tensor_exponent({3: 1}, {1: 1, 2: 1, 3: 1}) == {1: 2, 3: 2, 6: 1}
    assert tensor_exponent({1: 1}, {5: 2, 10: 1}) == {5: 2, 10: 1}


def test_tensor_exponent_rejects_empty():
    with pytest.raises(ValidationError):
        tensor_exponent({}, {1: 1})


def test_chi_of_examples():
    assert chi_of([3], [2, 3]) == ([1, 3, 6], {1: 2, 3: 1, 6: 1})
    assert chi_of([1], [1]) == ([1], {1: 1})
    assert chi_of([2], [4]) == ([4], {4: 1})


def test_exponent_to_poly_examples():
    assert exponent_to_poly({1: 1}) == IntPolynomial([-1, 1])
    assert exponent_to_poly({1: 1, 6: 1}) == IntPolynomial([-1, 2, -2, 1])
    assert exponent_to_poly({2: 3}) == IntPolynomial([1, 3, 3, 1])
    with pytest.raises(ValidationError):
        exponent_to_poly({2: -1})


def test_delta_integral_and_degree_identity():
    for m in range(1, 61):
        for n in range(1, 61):
            total = 0
            for l in range(1, lcm(m, n) + 1):
                d = delta(m, n, l)
                assert isinstance(d, int) and d >= 0
                total += d * euler_phi(l)
            assert total == euler_phi(m) * euler_phi(n)


def test_psi_product_matches_unit_root_tally():
    for m in range(1, 41):
        for n in range(m, 41):
            assert dict(mul(psi(m), psi(n)).items()) == oracles.psi_product(m, n)


def test_lambda_product_law():
    for m in range(1, 61):
        for n in range(1, 61):
            assert lambda_div(m) * lambda_div(n) == gcd(m, n) * lambda_div(lcm(m, n))


nonneg_divisor = st.dictionaries(st.integers(1, 30), st.integers(0, 3), max_size=4).map(Divisor)


@settings(max_examples=80, deadline=None)
@given(nonneg_divisor, nonneg_divisor)
def test_degree_multiplicative(d1, d2):
    assert degree(d1 * d2) == degree(d1) * degree(d2)


@settings(max_examples=80, deadline=None)
@given(nonneg_divisor, nonneg_divisor, nonneg_divisor)
def test_product_is_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.integers(1, 60), st.integers(1, 2), min_size=1, max_size=3))
def test_poly_round_trip(chi):
    assert poly_to_exponent(exponent_to_poly(chi)) == chi


def test_poly_to_exponent_rejects_non_cyclotomic():
    with pytest.raises(ValidationError):
        poly_to_exponent(IntPolynomial([2, 0, 1]))
