import pytest
from hypothesis import given, settings, strategies as st

from orlik.errors import ValidationError
from orlik.polyarith import (ONE, T, IntPolynomial, cyclo_at_one, cyclo_discriminant,
                             cyclo_resultant, cyclotomic, discriminant, divisors, euler_phi,
                             lambda_count, moebius, product, resultant, valuation)

import oracles


@pytest.mark.parametrize("p, m, v", [(2, 12, 2), (3, 12, 1), (5, 12, 0)])
def test_valuation(p, m, v):
    assert valuation(p, m) == v


def test_valuation_rejects_composite():
    with pytest.raises(ValidationError):
        valuation(4, 12)


@pytest.mark.parametrize("m, phi", [(1, 1), (6, 2), (12, 4)])
def test_euler_phi(m, phi):
    assert euler_phi(m) == phi


def test_euler_phi_rejects_zero():
    with pytest.raises(ValidationError):
        euler_phi(0)


@pytest.mark.parametrize("m, mu", [(1, 1), (6, 1), (12, 0), (30, -1)])
def test_moebius(m, mu):
    assert moebius(m) == mu


@pytest.mark.parametrize("m, coeffs", [(1, [-1, 1]), (6, [1, -1, 1]), (8, [1, 0, 0, 0, 1])])
def test_cyclotomic_examples(m, coeffs):
    assert cyclotomic(m) == IntPolynomial(coeffs)


def test_cyclotomic_against_sympy():
    for m in range(1, 80):
        assert list(cyclotomic(m).coeffs) == oracles.coeffs(oracles.cyclotomic(m))


def test_divisor_products_give_t_power_minus_one():
    for m in range(1, 201):
        assert product(cyclotomic(d) for d in divisors(m)) == T ** m - ONE


def test_resultant_examples():
    assert resultant(cyclotomic(1), cyclotomic(2)) == 2
    assert resultant(cyclotomic(2), cyclotomic(1)) == -2
    assert resultant(cyclotomic(2), cyclotomic(3)) == 1


def test_resultant_of_constants_is_one():
    assert resultant(ONE, ONE) == 1


def test_resultant_rejects_zero():
    with pytest.raises(ValidationError):
        resultant(IntPolynomial(), cyclotomic(1))


def test_discriminant_examples():
    assert discriminant(cyclotomic(4)) == 4
    assert discriminant(cyclotomic(1)) == 1
    # Res(f, f') convention, so positive here
    assert discriminant(cyclotomic(3)) == 3


def test_discriminant_rejects_constants():
    with pytest.raises(ValidationError):
        discriminant(ONE)


@pytest.mark.parametrize("m, n, r", [(4, 2, 2), (3, 3, 0), (2, 1, -2), (1, 2, 2), (6, 10, 1)])
def test_cyclo_resultant_examples(m, n, r):
    assert cyclo_resultant(m, n) == r


@pytest.mark.parametrize("m, d", [(4, 4), (1, 1), (12, 144)])
def test_cyclo_discriminant_examples(m, d):
    assert cyclo_discriminant(m) == d


@pytest.mark.parametrize("m, v", [(9, 3), (6, 1), (1, 0), (8, 2)])
def test_cyclo_at_one(m, v):
    assert cyclo_at_one(m) == v == cyclotomic(m)(1)


@pytest.mark.parametrize("args, value", [((6, 6, 3, 1), 1), ((6, 6, 5, 1), 0), ((6, 2, 3, 1), 1)])
def test_lambda_count_examples(args, value):
    assert lambda_count(*args) == value


def test_resultants_agree_with_sympy():
    for m in range(1, 25):
        for n in range(1, 25):
            f, g = cyclotomic(m), cyclotomic(n)
            assert resultant(f, g) == oracles.resultant(list(f.coeffs), list(g.coeffs))


unitary = st.lists(st.integers(-4, 4), min_size=0, max_size=8).map(lambda c: IntPolynomial(c + [1]))


@settings(max_examples=60, deadline=None)
@given(unitary, unitary)
def test_resultant_antisymmetry(f, g):
    assert resultant(f, g) == (-1) ** (f.degree * g.degree) * resultant(g, f)


small_unitary = st.lists(st.integers(-3, 3), min_size=0, max_size=6).map(
    lambda c: IntPolynomial(c + [1]))


@settings(max_examples=60, deadline=None)
@given(small_unitary, small_unitary, small_unitary)
def test_resultant_multiplicative(f, g, h):
    assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


@settings(max_examples=60, deadline=None)
@given(small_unitary, small_unitary)
def test_division_with_remainder(f, g):
    q, r = divmod(f * g + f, g)
    assert q * g + r == f * g + f
    assert r.degree < g.degree


def test_polynomial_printing():
    assert str(cyclotomic(6)) == "t^2 - t + 1"
    assert str(IntPolynomial()) == "0"
