import random

import pytest
from hypothesis import given, settings, strategies as st

from orlik.errors import ValidationError
from orlik.lattice import power_basis_check, tensor_basis_check
from orlik.polyarith import divisors, euler_phi
from orlik.sdiob import (PEdge, _local_tables, chi_local, gamma_fiber, gamma_mu,
                         is_sdiob_power, is_sdiob_tensor, k_set, p_edges, pi_p, xi)
from orlik.divisor import chi_of, delta


def test_p_edges_examples():
    assert p_edges({1, 3, 6}) == [PEdge(2, 6, 3), PEdge(3, 3, 1)]
    assert p_edges({5}) == []
    assert {(e.a, e.b) for e in p_edges({2, 4, 8})} == {(4, 2), (8, 4), (8, 2)}


def test_gamma():
    assert gamma_mu(6, 4) == 2
    assert gamma_fiber(2, 1) == [1, 2]
    assert all(gamma_mu(1, m) == m for m in range(1, 50))


def test_gamma_fiber_is_preimage():
    for mu in range(1, 25):
        for n in range(1, 25):
            assert gamma_fiber(mu, n) == [m for m in range(1, 25 * 25 + 1) if gamma_mu(mu, m) == n]


def test_k_set_examples():
    M = set(divisors(6)) - {1}
    assert k_set(M, 2, 3) == {0, 1}
    assert k_set(M, 2, 1) == {1}
    assert k_set({5}, 2, 5) == {0}
    with pytest.raises(ValidationError):
        k_set(M, 2, 2)


def test_power_examples():
    assert is_sdiob_power({1, 2, 6}, 4) == (True, None)
    assert is_sdiob_power({1, 2}, 2) == (True, None)


def test_chi_local_examples():
    assert chi_local([3], [2, 3], 2, 3, 3, 1) == 2
    assert chi_local([3], [2, 3], 2, 3, 1, 6) == 1
    assert chi_local([3], [1, 2, 3], 3, 1, 1, 3) == 2
    with pytest.raises(ValidationError):
        chi_local([3], [2, 3], 2, 5, 3, 1)


def test_tensor_examples():
    assert is_sdiob_tensor([3], [2, 3]) == (False, PEdge(2, 6, 3))
    assert is_sdiob_tensor([3], [1, 2, 3]) == (True, None)
    a2 = set(divisors(3)) - {1}
    a5 = set(divisors(6)) - {1}
    assert is_sdiob_tensor(a2, a5)[0]


def test_xi_examples():
    assert xi([3], [2, 3], 2, 6, 3) == (1, 0, 1)
    assert xi([3], [1, 2, 3], 2, 6, 3) == (1, 1, 0)
    assert xi([3], [2, 3], 3, 3, 1) == (1, 1, 0)
    with pytest.raises(ValidationError):
        xi([3], [2, 3], 2, 3, 1)


block = st.sets(st.integers(1, 60), min_size=1, max_size=4)


@settings(max_examples=100, deadline=None)
@given(block, block)
def test_xi_vanishes_exactly_on_uniform_edges(M, N):
    L, chi = chi_of(M, N)
    for p, la, lb in p_edges(L):
        local = _local_tables(sorted(M), sorted(N), p).values()
        uniform = all(d[lb] <= d[la] for d in local) or all(d[lb] >= d[la] for d in local)
        x1, x2, x = xi(M, N, p, la, lb)
        assert x >= 0
        assert (x == 0) == uniform


@settings(max_examples=100, deadline=None)
@given(block, block)
def test_local_multiplicities_sum_to_chi(M, N):
    L, chi = chi_of(M, N)
    for p in (2, 3, 5):
        tables = _local_tables(sorted(M), sorted(N), p)
        for l in L:
            assert sum(d[l] for d in tables.values()) == chi[l]


@settings(max_examples=100, deadline=None)
@given(st.sets(st.integers(1, 48), min_size=1, max_size=4),
       st.sets(st.integers(1, 48), min_size=1, max_size=4))
def test_local_inequalities_follow_from_k_sets(M, N):
    L, _ = chi_of(M, N)
    for p, la, lb in p_edges(L):
        ka = 0
        x = la
        while x % p == 0:
            x //= p
            ka += 1
        for (m0, n0), d in _local_tables(sorted(M), sorted(N), p).items():
            in_m, in_n = ka in k_set(M, p, m0), ka in k_set(N, p, n0)
            if in_m != in_n:
                assert d[lb] <= d[la]
            else:
                assert d[lb] >= d[la]
            if delta(m0, n0, pi_p(p, la)) == 0:
                assert d[la] == d[lb] == 0


def test_power_sufficiency_gives_unimodular_basis():
    rng = random.Random(7)
    pool = [m for m in range(1, 40) if euler_phi(m) <= 8]
    checked = 0
    while checked < 120:
        M = set(rng.sample(pool, rng.randint(1, 3)))
        if sum(euler_phi(m) for m in M) > 24:
            continue
        mu = rng.randint(1, 12)
        ok, _ = is_sdiob_power(M, mu)
        if ok:
            assert abs(power_basis_check(M, mu)[0]) == 1
        checked += 1


def test_tensor_sufficiency_gives_unimodular_basis():
    rng = random.Random(11)
    pool = [m for m in range(1, 21) if euler_phi(m) <= 6]
    checked = 0
    while checked < 80:
        M = set(rng.sample(pool, rng.randint(1, 2)))
        N = set(rng.sample(pool, rng.randint(1, 2)))
        if sum(map(euler_phi, M)) * sum(map(euler_phi, N)) > 24:
            continue
        d, predicted = tensor_basis_check(M, N)
        if is_sdiob_tensor(M, N)[0]:
            assert d == 1
        checked += 1
