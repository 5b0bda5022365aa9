"""Explicit integral certificates for standard decompositions.

For chains and sums built from chains and cycles, an integral model of
the monodromy is assembled (powers of companion matrices, Kronecker
products) and an explicit unimodular base change to the block form of
the standard covering is constructed and checked entry by entry.

Blocks are tracked as (set, columns): the columns span an invariant
sublattice on which h acts as the companion matrix of the product of
Phi_m over the set.
"""

from dataclasses import dataclass

from . import matrix
from .divisor import chi_of
from .errors import ConsistencyError, ValidationError
from .lattice import (CONJUGATION_RANK_CAP, Conjugation, companion_matrix,
                      complete_decomposition, power_divisors, split_sum_exchange,
                      tensor_seeds, unit)
from .orders import standard_covering
from .polyarith import ONE, cyclotomic_product
from .singular import (Chain, Cycle, Sum, Weights, chain_data, cycle_data,
                       decompose, milnor_number)
from .sdiob import psi_power


@dataclass
class Certificate:
    h: list
    conjugation: Conjugation
    covering: tuple
    exchanges: int

    def to_json(self):
        return {
            "rank": len(self.h),
            "covering": [list(s) for s in self.covering],
            "exchanges": self.exchanges,
            "det": matrix.det(self.conjugation.U),
            "verified": True,
        }


def _split(cols, sets):
    out, i = [], 0
    for s in sets:
        d = cyclotomic_product(s).degree
        out.append((frozenset(s), cols[i:i + d]))
        i += d
    return out


def merge_to_standard(blocks):
    """Replace pairs of non-nested blocks by their union and intersection
    until the sets form a chain.  Returns (blocks, number of exchanges)."""
    blocks = list(blocks)
    count = 0
    changed = True
    while changed:
        changed = False
        for a in range(len(blocks)):
            for b in range(a + 1, len(blocks)):
                (A, cols_a), (B, cols_b) = blocks[a], blocks[b]
                if A <= B or B <= A:
                    continue
                if not A & B:
                    raise ConsistencyError(f"blocks {sorted(A)} and {sorted(B)} are disjoint")
                ex = split_sum_exchange(ONE, cyclotomic_product(B - A),
                                        cyclotomic_product(A & B), cyclotomic_product(A - B))
                V = matrix.matmul(matrix.from_columns(cols_a + cols_b, len(cols_a[0])), ex.U)
                new = matrix.columns(V)
                d = ex.blocks[0].degree
                blocks[a] = (A | B, new[:d])
                blocks[b] = (A & B, new[d:])
                count += 1
                changed = True
    blocks.sort(key=lambda blk: (-len(blk[0]), sorted(blk[0])))
    return blocks, count


def _assemble(h, blocks):
    cols = [c for _, cs in blocks for c in cs]
    polys = [cyclotomic_product(s) for s, _ in blocks]
    conj = Conjugation(matrix.from_columns(cols, len(h)), polys)
    conj.verify(h)
    return conj


def _chain_model(a, cap):
    data = chain_data(a)
    g = companion_matrix(cyclotomic_product(data.M))
    h = matrix.matpow(g, data.mu)
    psi = psi_power(data.M, data.mu)
    sets = standard_covering(psi)
    polys = power_divisors(data.M, data.mu)
    seeds = [unit(len(h), j) for j in range(len(polys))]
    try:
        conj = complete_decomposition(h, polys, seeds, cap)
    except ValidationError as exc:
        raise ConsistencyError(f"chain {a}: power basis tuple fails: {exc}") from exc
    return h, _split(matrix.columns(conj.U), sets), 0


def _cycle_model(a):
    covering = cycle_data(a).covering
    h = matrix.block_diag(*(companion_matrix(cyclotomic_product(s)) for s in covering))
    return h, _split(matrix.columns(matrix.identity(len(h))), covering), 0


def _tensor_model(left, right, cap):
    hf, bf, nf = left
    hg, bg, ng = right
    h = matrix.kron(hf, hg)
    blocks = []
    for M, cols_m in bf:
        for N, cols_n in bg:
            embed = matrix.from_columns(
                [matrix.kron_vec(x, y) for x in cols_m for y in cols_n], len(h))
            g_loc, h_loc, polys, seeds = tensor_seeds(sorted(M), sorted(N))
            try:
                local = complete_decomposition(matrix.kron(g_loc, h_loc), polys, seeds, cap)
            except ValidationError as exc:
                raise ConsistencyError(
                    f"tensor basis tuple for {sorted(M)} x {sorted(N)} fails: {exc}") from exc
            _, chi = chi_of(M, N)
            cols = matrix.columns(matrix.matmul(embed, local.U))
            blocks.extend(_split(cols, standard_covering(chi)))
    blocks, count = merge_to_standard(blocks)
    return h, blocks, nf + ng + count


def _model(expr, cap):
    if isinstance(expr, Chain):
        return _chain_model(expr.a, cap)
    if isinstance(expr, Cycle):
        return _cycle_model(expr.a)
    if isinstance(expr, Sum):
        return _tensor_model(_model(expr.left, cap), _model(expr.right, cap), cap)
    if isinstance(expr, Weights):
        raise ValidationError("no integral model for a bare weight system")
    raise ValidationError(f"unknown expression {expr!r}")


def certify(expr, cap=CONJUGATION_RANK_CAP):
    """Build and check a unimodular conjugation of the monodromy of expr
    to the block form of its standard covering."""
    mu = milnor_number(expr)
    if mu > cap:
        raise ValidationError(f"Milnor number {mu} exceeds the cap {cap}")
    h, blocks, count = _model(expr, cap)
    conj = _assemble(h, blocks)
    covering = tuple(tuple(sorted(s)) for s, _ in blocks)
    expected = decompose(expr).covering
    if covering != expected:
        raise ConsistencyError(f"{expr}: certified covering {covering} != standard {expected}")
    return Certificate(h, conj, covering, count)


def inverse_unimodular(U):
    n = len(U)
    cols = []
    for i in range(n):
        x = matrix.solve_integer(U, unit(n, i))
        if x is None:
            raise ValidationError("matrix is not unimodular")
        cols.append(x)
    return matrix.from_columns(cols, n)


def covering_isomorphism(cov1, cov2):
    """Explicit isomorphism between the Orlik-block sums of two coverings
    of the same exponent map, through exchange moves.

    Returns (conjugation, exchanges) with h1 U = U h2, where h_i is the
    block companion matrix of cov_i.
    """
    models = []
    for cov in (cov1, cov2):
        h = matrix.block_diag(*(companion_matrix(cyclotomic_product(s)) for s in cov))
        blocks, count = merge_to_standard(_split(matrix.columns(matrix.identity(len(h))), cov))
        models.append((h, matrix.from_columns([c for _, cs in blocks for c in cs], len(h)),
                       [s for s, _ in blocks], count))
    (h1, W1, s1, c1), (h2, W2, s2, c2) = models
    if s1 != s2:
        raise ValidationError("coverings belong to different exponent maps")
    U = matrix.matmul(W1, inverse_unimodular(W2))
    conj = Conjugation(U, [cyclotomic_product(s) for s in cov2])
    conj.verify(h1)
    return conj, c1 + c2
