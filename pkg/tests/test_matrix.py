from hypothesis import given, settings, strategies as st

from orlik import matrix
from orlik.polyarith import cyclotomic, sylvester_matrix

import oracles


def square(n, lo=-5, hi=5):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


def test_identity_det_and_snf():
    d, u, v = matrix.smith_normal_form(matrix.identity(3))
    assert matrix.det(matrix.identity(3)) == 1
    assert d == matrix.identity(3)


def test_snf_of_diag_2_3():
    assert matrix.invariant_factors([[2, 0], [0, 3]]) == [1, 6]


def test_sylvester_of_phi1_phi2():
    assert abs(matrix.det(sylvester_matrix(cyclotomic(1), cyclotomic(2)))) == 2


def test_empty_matrix_has_det_one():
    assert matrix.det([]) == 1


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6).flatmap(square))
def test_det_matches_sympy(a):
    assert matrix.det(a) == oracles.det(a)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_smith_form_transforms(a):
    d, u, v = matrix.smith_normal_form(a)
    assert matrix.matmul(matrix.matmul(u, a), v) == d
    assert abs(matrix.det(u)) == 1 and abs(matrix.det(v)) == 1
    diag = [d[i][i] for i in range(len(a))]
    nonzero = [x for x in diag if x]
    assert all(x > 0 for x in nonzero)
    assert all(b % a_ == 0 for a_, b in zip(nonzero, nonzero[1:]))
    assert nonzero == oracles.invariant_factors(a)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(square), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_solve_integer_finds_preimages(a, x):
    b = matrix.matvec(a, x[:len(a)])
    y = matrix.solve_integer(a, b)
    assert y is not None and matrix.matvec(a, y) == b


def test_solve_integer_detects_non_integral():
    assert matrix.solve_integer([[2]], [1]) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: square(n, -2, 2)))
def test_kernel_basis_is_killed_and_primitive(a):
    ker = matrix.kernel_basis(a)
    for k in ker:
        assert not any(matrix.matvec(a, k))
    assert len(ker) == len(a) - matrix.rank(a)
    assert matrix.is_primitive(ker, len(a))


def test_kron_vec_matches_kron():
    a, b = [[1, 2], [3, 4]], [[0, 1], [1, 1]]
    u, v = [1, -1], [2, 5]
    lhs = matrix.matvec(matrix.kron(a, b), matrix.kron_vec(u, v))
    assert lhs == matrix.kron_vec(matrix.matvec(a, u), matrix.matvec(b, v))
