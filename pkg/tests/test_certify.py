from fractions import Fraction

import pytest

from orlik import matrix
from orlik.certify import certify, covering_isomorphism, inverse_unimodular, merge_to_standard
from orlik.errors import ValidationError
from orlik.lattice import companion_matrix
from orlik.orders import enumerate_compatible_coverings
from orlik.polyarith import cyclotomic_product
from orlik.singular import Chain, Cycle, Sum, Weights, WeightSystem, char_exponent, fold_sum
from orlik.suite import random_expressions

import oracles
from instances import rectangles


def check(expr, cap=16):
    cert = certify(expr, cap=cap)
    blocks = [list(cyclotomic_product(s).coeffs) for s in cert.covering]
    assert oracles.is_conjugation(cert.h, cert.conjugation.U, blocks)
    assert oracles.charpoly(cert.h) == oracles.exponent_poly(char_exponent(expr))
    return cert


@pytest.mark.parametrize("expr", [
    Chain((2, 2)), Chain((3,)), Chain((1, 2, 2)), Cycle((2, 3)), Cycle((2, 2, 2)),
    Sum(Chain((1,)), Chain((2,))), Sum(Chain((2,)), Chain((2,))),
    fold_sum([Chain((1,)), Chain((1,)), Chain((1,))]), Sum(Cycle((2, 3)), Chain((1,))),
])
def test_certificates_against_sympy(expr):
    cert = check(expr)
    assert cert.to_json()["verified"] and abs(cert.to_json()["det"]) == 1


def test_random_sums_certify():
    for expr in random_expressions(25, 16, seed=11):
        check(expr)


def test_exchange_path():
    expr = fold_sum([Cycle((2, 2)), Chain((4, 2)), Chain((1,)), Chain((1,))])
    cert = certify(expr, cap=48)
    assert cert.exchanges > 0
    assert abs(matrix.det(cert.conjugation.U)) == 1


def test_cap_and_weights_rejected():
    with pytest.raises(ValidationError):
        certify(Chain((20,)))
    with pytest.raises(ValidationError):
        certify(Weights(WeightSystem([Fraction(1, 2), Fraction(1, 3)])))


def test_merge_of_nested_blocks_is_a_noop():
    cols = matrix.columns(matrix.identity(3))
    blocks = [(frozenset({1, 2}), cols[:2]), (frozenset({1}), cols[2:])]
    assert merge_to_standard(blocks) == (blocks, 0)


def test_inverse_unimodular():
    U = [[2, 1], [1, 1]]
    assert matrix.matmul(U, inverse_unimodular(U)) == matrix.identity(2)
    with pytest.raises(ValidationError):
        inverse_unimodular([[2, 0], [0, 1]])


def test_isomorphism_between_rectangle_coverings():
    _, _, _, chi, _, orders = rectangles()
    covs = enumerate_compatible_coverings(chi, orders)
    assert len(covs) == 2
    conj, exchanges = covering_isomorphism(covs[1], covs[0])
    assert exchanges == 1
    h1 = matrix.block_diag(*(companion_matrix(cyclotomic_product(s)) for s in covs[1]))
    blocks = [list(cyclotomic_product(s).coeffs) for s in covs[0]]
    assert oracles.is_conjugation(h1, conj.U, blocks)


def test_isomorphism_rejects_different_maps():
    with pytest.raises(ValidationError):
        covering_isomorphism([(1, 2)], [(1, 3)])
