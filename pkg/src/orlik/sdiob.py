"""Sufficiency criteria for standard decompositions into Orlik blocks.

Two constructions are covered: the power h^mu of a single Orlik block
with eigenvalue orders M, and the tensor product of the blocks for M
and N.  Both are decided edge by edge on the divisibility graph, where
a p-edge (a, b) means a / b is a positive power of the prime p.
"""

from math import gcd
from typing import NamedTuple

from .divisor import Divisor, mul
from .errors import ValidationError
from .polyarith import divisors, euler_phi, factorize, is_prime, prime_power, valuation


class PEdge(NamedTuple):
    p: int
    a: int
    b: int


def block_set(xs):
    """Validate and normalise a block set to a sorted tuple."""
    out = tuple(sorted({int(x) for x in xs}))
    if not out:
        raise ValidationError("block set must be non-empty")
    if out[0] < 1:
        raise ValidationError("block set elements must be positive")
    return out


def pi_p(p, m):
    """m with all factors p removed."""
    while m % p == 0:
        m //= p
    return m


def p_edges(M):
    """All p-edges inside M, sorted by (p, a, b)."""
    ms = sorted(set(M))
    out = []
    for i, b in enumerate(ms):
        for a in ms[i + 1:]:
            if a % b == 0:
                pk = prime_power(a // b)
                if pk:
                    out.append(PEdge(pk[0], a, b))
    return sorted(out)


def gamma_mu(mu, m):
    """Order of the mu-th power of a unit root of order m."""
    return m // gcd(m, mu)


def gamma_fiber(mu, n):
    """All m with gamma_mu(mu, m) == n, sorted."""
    fm = factorize(mu)
    fn = factorize(n)
    base = n
    free = 1
    for p, k in fm.items():
        if p in fn:
            base *= p ** k
        else:
            free *= p ** k
    return [base * c for c in divisors(free)]


def k_set(M, p, m0):
    """{k : p^k * m0 in M}."""
    if m0 % p == 0:
        raise ValidationError(f"{m0} is divisible by {p}")
    out = set()
    for m in M:
        k = valuation(p, m)
        if m // p ** k == m0:
            out.add(k)
    return out


def _power_edge_ok(Ms, mu, edge):
    p, na, nb = edge
    fa = [m for m in Ms if gamma_mu(mu, m) == na]
    fb = [m for m in Ms if gamma_mu(mu, m) == nb]
    vmu = valuation(p, mu)
    if nb % p == 0:
        step = na // nb
        forward = all(m // step in Ms for m in fa)
    else:
        forward = all(pi_p(p, m) * p ** k in Ms for m in fa for k in range(vmu + 1))
    if forward:
        return True
    top = valuation(p, na) + vmu
    return all(pi_p(p, m) * p ** top in Ms for m in fb)


def is_sdiob_power(M, mu):
    """(ok, witness): is (M, mu) sdiOb-sufficient?  The witness is the
    first failing p-edge of gamma_mu(M), or None."""
    Ms = set(block_set(M))
    if mu < 1:
        raise ValidationError("mu must be positive")
    image = {gamma_mu(mu, m) for m in Ms}
    for edge in p_edges(image):
        if not _power_edge_ok(Ms, mu, edge):
            return False, edge
    return True, None


def psi_power(M, mu):
    """n -> multiplicity of each primitive n-th unit root as an
    eigenvalue of h^mu on the Orlik block of M."""
    out = {}
    for m in block_set(M):
        n = gamma_mu(mu, m)
        out[n] = out.get(n, 0) + euler_phi(m)
    return {n: s // euler_phi(n) for n, s in sorted(out.items())}


def _fibers(S, p):
    out = {}
    for m in S:
        out.setdefault(pi_p(p, m), []).append(m)
    return out


def _local_tables(M, N, p):
    """(m0, n0) -> divisor of the product restricted to pi_p fibers."""
    fm, fn = _fibers(M, p), _fibers(N, p)
    out = {}
    for m0 in sorted(fm):
        dm = Divisor({m: 1 for m in fm[m0]})
        for n0 in sorted(fn):
            out[m0, n0] = mul(dm, Divisor({n: 1 for n in fn[n0]}))
    return out


def chi_local(M, N, p, m0, n0, l):
    """Multiplicity of Psi_l in the product of the parts of M and N lying
    over m0 and n0 under pi_p."""
    M, N = block_set(M), block_set(N)
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    fm, fn = _fibers(M, p), _fibers(N, p)
    if m0 not in fm or n0 not in fn:
        raise ValidationError(f"({m0}, {n0}) is not in pi_{p}(M) x pi_{p}(N)")
    return mul(Divisor({m: 1 for m in fm[m0]}), Divisor({n: 1 for n in fn[n0]}))[l]


def _product_support(M, N):
    return mul(Divisor({m: 1 for m in M}), Divisor({n: 1 for n in N}))


def is_sdiob_tensor(M, N):
    """(ok, witness) for the pair (M, N); the witness is the first p-edge
    of L(M, N) where neither inequality holds uniformly."""
    M, N = block_set(M), block_set(N)
    L = _product_support(M, N).support()
    tables = {}
    for edge in p_edges(L):
        if edge.p not in tables:
            tables[edge.p] = _local_tables(M, N, edge.p)
        local = tables[edge.p].values()
        if all(d[edge.b] <= d[edge.a] for d in local):
            continue
        if all(d[edge.b] >= d[edge.a] for d in local):
            continue
        return False, edge
    return True, None


def xi(M, N, p, la, lb):
    """(Xi1, Xi2p, Xi) for the p-edge (la, lb) of L(M, N).

    Xi is zero exactly when the edge satisfies one of the two uniform
    inequalities between the local multiplicities.
    """
    M, N = block_set(M), block_set(N)
    chi = _product_support(M, N)
    if chi[la] == 0 or chi[lb] == 0 or la % lb or prime_power(la // lb) is None \
            or prime_power(la // lb)[0] != p:
        raise ValidationError(f"({la}, {lb}) is not a {p}-edge of L")
    xi1 = min(chi[la], chi[lb])
    xi2 = sum(min(d[la], d[lb]) for d in _local_tables(M, N, p).values())
    return xi1, xi2, xi1 - xi2
