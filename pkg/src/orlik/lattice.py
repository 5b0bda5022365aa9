"""Exact lattice computations that certify decompositions into companion
blocks.

A lattice with endomorphism is a square integer matrix h acting on
Z^n.  A Conjugation is a unimodular U together with polynomials
p_1, .., p_k such that h U = U * blockdiag(companion(p_1), ..)."""

from dataclasses import dataclass
from math import prod

from . import matrix
from .divisor import chi_of
from .errors import ConsistencyError, ValidationError
from .matrix import det, smith_normal_form  # noqa: F401  (re-exported)
from .polyarith import (ONE, IntPolynomial, cyclotomic_product, euler_phi,
                        resultant, sylvester_matrix)
from .sdiob import block_set, p_edges, psi_power, xi

DET_RANK_CAP = 24
CONJUGATION_RANK_CAP = 16


def companion_matrix(p):
    """Matrix of multiplication by t on Z[t]/(p) in the basis 1, t, .., t^(n-1)."""
    if not p.is_unitary() or p.degree < 1:
        raise ValidationError(f"companion matrix needs a unitary polynomial of degree >= 1, got {p}")
    n = p.degree
    out = matrix.zeros(n, n)
    for i in range(1, n):
        out[i][i - 1] = 1
    for i in range(n):
        out[i][n - 1] = -p.coeffs[i]
    return out


def _block_companions(polys):
    return matrix.block_diag(*(companion_matrix(p) for p in polys if p.degree > 0))


def poly_at_matrix(p, h):
    n = len(h)
    acc = matrix.zeros(n, n)
    for c in reversed(p.coeffs):
        acc = matrix.matmul(acc, h)
        for i in range(n):
            acc[i][i] += c
    return acc


def poly_apply(p, h, v):
    """p(h) v, by Horner's rule on vectors."""
    acc = [0] * len(v)
    for c in reversed(p.coeffs):
        acc = matrix.matvec(h, acc)
        acc = [x + c * y for x, y in zip(acc, v)]
    return acc


def orbit(h, v, count):
    """[v, h v, .., h^(count-1) v]."""
    out = []
    for _ in range(count):
        out.append(v)
        v = matrix.matvec(h, v)
    return out


def unit(n, i=0):
    v = [0] * n
    v[i] = 1
    return v


@dataclass
class Conjugation:
    U: list
    blocks: list

    def target(self):
        return _block_companions(self.blocks)

    def verify(self, h):
        """Check h U == U B exactly and det U = +-1; raise if not."""
        d = det(self.U)
        if abs(d) != 1:
            raise ConsistencyError(f"base change has determinant {d}")
        if matrix.matmul(h, self.U) != matrix.matmul(self.U, self.target()):
            raise ConsistencyError("base change does not conjugate to the block form")
        return True

    def to_json(self):
        return {"U": self.U, "det": det(self.U), "blocks": [list(p.coeffs) for p in self.blocks]}


def resultant_index(f, g):
    """Index of the lattice spanned by the Sylvester columns, via Smith form."""
    if f.degree + g.degree == 0:
        return 1
    factors = matrix.invariant_factors(sylvester_matrix(f, g))
    if len(factors) < f.degree + g.degree:
        raise ValidationError("polynomials have a common factor")
    return abs(prod(factors))


def bezout_unimodular(f, g):
    """(u, v) with u f + v g = 1, deg u < deg g, deg v < deg f."""
    if abs(resultant(f, g)) != 1:
        raise ValidationError(f"|Res({f}, {g})| != 1")
    m, n = f.degree, g.degree
    if m + n == 0:
        return ONE, IntPolynomial()
    x = matrix.solve_integer(sylvester_matrix(f, g), unit(m + n))
    if x is None:
        raise ConsistencyError("Sylvester system is not solvable despite unit resultant")
    u, v = IntPolynomial(x[:n]), IntPolynomial(x[n:])
    if u * f + v * g != ONE:
        raise ConsistencyError("Bezout identity failed")
    return u, v


def _check_rank(n, cap):
    if n > cap:
        raise ValidationError(f"rank {n} exceeds the cap {cap}")


def power_divisors(M, mu):
    """Elementary divisors of h^mu on the Orlik block of M."""
    psi = psi_power(M, mu)
    top = max(psi.values())
    return [cyclotomic_product(n for n, k in psi.items() if k >= j) for j in range(1, top + 1)]


def power_basis_check(M, mu, cap=DET_RANK_CAP):
    """(det, basis) for the tuple h^(j-1+mu*i) e_1 on the Orlik block of M."""
    M = block_set(M)
    p = cyclotomic_product(M)
    _check_rank(p.degree, cap)
    h = companion_matrix(p)
    n = p.degree
    powers = orbit(h, unit(n), mu * n + n)
    cols = []
    for j, pj in enumerate(power_divisors(M, mu), start=1):
        cols.extend(powers[j - 1 + mu * i] for i in range(pj.degree))
    basis = matrix.from_columns(cols, n)
    return det(basis), basis


def tensor_divisors(M, N):
    _, chi = chi_of(M, N)
    top = max(chi.values())
    return [cyclotomic_product(l for l, c in chi.items() if c >= k) for k in range(1, top + 1)]


def tensor_seeds(M, N):
    """h_M, h_N and the seeds a_i (x) b_0 of the tensor basis tuple."""
    g = companion_matrix(cyclotomic_product(M))
    h = companion_matrix(cyclotomic_product(N))
    polys = tensor_divisors(M, N)
    a = orbit(g, unit(len(g)), len(polys))
    b0 = unit(len(h))
    return g, h, polys, [matrix.kron_vec(ai, b0) for ai in a]


def predicted_tensor_det(M, N):
    out = 1
    L, _ = chi_of(M, N)
    for p, la, lb in p_edges(L):
        out *= p ** (euler_phi(lb) * xi(M, N, p, la, lb)[2])
    return out


def tensor_basis_check(M, N, cap=DET_RANK_CAP):
    """(|det|, predicted) for the tensor basis tuple; a mismatch raises."""
    M, N = block_set(M), block_set(N)
    _check_rank(sum(euler_phi(m) for m in M) * sum(euler_phi(n) for n in N), cap)
    g, h, polys, seeds = tensor_seeds(M, N)
    gh = matrix.kron(g, h)
    cols = []
    for seed, p in zip(seeds, polys):
        cols.extend(orbit(gh, seed, p.degree))
    d = abs(det(matrix.from_columns(cols, len(gh))))
    predicted = predicted_tensor_det(M, N)
    if d != predicted:
        raise ConsistencyError(f"tensor basis for {M} x {N}: |det| = {d}, predicted {predicted}")
    return d, predicted


def complete_decomposition(h, polys, seeds, cap=CONJUGATION_RANK_CAP):
    """Turn a seed tuple whose orbits form a basis into a standard decomposition.

    Block j is generated by seed_j + b_j with b_j in the span of the
    earlier blocks, chosen so that p_j(h) kills the generator.
    """
    n = len(h)
    _check_rank(n, cap)
    if len(polys) != len(seeds):
        raise ValidationError("need one seed per elementary divisor")
    tuple_cols = []
    for seed, p in zip(seeds, polys):
        tuple_cols.extend(orbit(h, seed, p.degree))
    if len(tuple_cols) != n or abs(det(matrix.from_columns(tuple_cols, n))) != 1:
        raise ValidationError("seed orbits do not form a basis")

    cols = []
    for seed, p in zip(seeds, polys):
        gen = seed
        if cols:
            ph = poly_at_matrix(p, h)
            lhs = matrix.matmul(ph, matrix.from_columns(cols, n))
            rhs = [-x for x in matrix.matvec(ph, seed)]
            x = matrix.solve_integer(lhs, rhs)
            if x is None:
                raise ConsistencyError("correction term does not exist")
            shift = matrix.matvec(matrix.from_columns(cols, n), x)
            gen = [a + b for a, b in zip(seed, shift)]
        cols.extend(orbit(h, gen, p.degree))
    conj = Conjugation(matrix.from_columns(cols, n), list(polys))
    conj.verify(h)
    return conj


def split_sum_exchange(f1, f2, f3, f4):
    """Base change from H[f1 f3 f4] + H[f2 f3] to H[f2 f3 f4] + H[f1 f3]."""
    fs = (f1, f2, f3, f4)
    for p in fs:
        if not p.is_unitary():
            raise ValidationError(f"{p} is not unitary")
    for i in range(4):
        for j in range(i + 1, 4):
            if resultant(fs[i], fs[j]) == 0:
                raise ValidationError(f"Res(f{i + 1}, f{j + 1}) = 0")
    for i in (0, 1):
        r = resultant(fs[i], f4)
        if abs(r) != 1:
            raise ValidationError(f"|Res(f{i + 1}, f4)| = {abs(r)} != 1")
    first, second = f1 * f3 * f4, f2 * f3
    d1, d2 = first.degree, second.degree
    h = _block_companions([first, second])
    h1 = companion_matrix(first) if d1 else []
    h2 = companion_matrix(second) if d2 else []
    u, v = bezout_unimodular(f1 * f2, f4)
    g1, g4 = u, -v
    a1, a2 = unit(d1), unit(d2)
    b1 = (poly_apply(g1 * f1, h1, a1) if d1 else []) + a2
    b2 = (poly_apply(g4 * f4, h1, a1) if d1 else []) + (poly_apply(f2, h2, a2) if d2 else [])
    new_first, new_second = f2 * f3 * f4, f1 * f3
    cols = orbit(h, b1, new_first.degree) + orbit(h, b2, new_second.degree)
    conj = Conjugation(matrix.from_columns(cols, d1 + d2), [new_first, new_second])
    conj.verify(h)
    return conj


def primitive_part_check(p1, p2):
    """On the companion block of p1 p2, is the image of p2(h) primitive
    and equal to the kernel of p1(h)?"""
    if p1.degree < 1 or p2.degree < 1:
        raise ValidationError("primitive_part_check needs degree >= 1 polynomials")
    h = companion_matrix(p1 * p2)
    image = poly_at_matrix(p2, h)
    factors = matrix.invariant_factors(image)
    if len(factors) != p1.degree or any(x != 1 for x in factors):
        return False
    if any(any(row) for row in matrix.matmul(poly_at_matrix(p1, h), image)):
        return False
    kernel = matrix.kernel_basis(poly_at_matrix(p1, h))
    if len(kernel) != p1.degree:
        return False
    return all(matrix.solve_integer(image, k) is not None for k in kernel)


def coprime_split(f, g):
    """Conjugation of H[fg] to H[f] + H[g], or None if there is none.

    The only candidates for the summands are the primitive sublattices
    g(h)H = ker f(h) and f(h)H = ker g(h), so it is enough to test
    whether their generators span.
    """
    if f.degree < 1 or g.degree < 1:
        raise ValidationError("coprime_split needs degree >= 1 polynomials")
    h = companion_matrix(f * g)
    e = unit(len(h))
    seeds = [poly_apply(g, h, e), poly_apply(f, h, e)]
    _check_rank(len(h), CONJUGATION_RANK_CAP)
    try:
        return complete_decomposition(h, [f, g], seeds)
    except ValidationError:
        return None
