"""Quasihomogeneous singularities: chain and cycle types, their
Thom-Sebastiani sums and bare weight systems.

Everything is expressed through exponent maps m -> multiplicity of
Phi_m in the characteristic polynomial of the Milnor monodromy.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, prod

from . import orders as ords
from .divisor import Divisor, exponent_to_poly, tensor_exponent
from .errors import ConsistencyError, ValidationError
from .polyarith import (cyclo_at_one, divisors, factorize, lcm, moebius,
                        valuation)
from .sdiob import psi_power

KOUCHNIRENKO_MAX_VARS = 8


class WeightSystem:
    """Weights w_j = s_j / t_j in (0, 1)."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        ws = tuple(Fraction(w) for w in weights)
        if not ws:
            raise ValidationError("weight system needs at least one weight")
        for w in ws:
            if not 0 < w < 1:
                raise ValidationError(f"weight {w} is not in (0, 1)")
        self.weights = ws

    @property
    def n(self):
        return len(self.weights)

    @property
    def s(self):
        return [w.numerator for w in self.weights]

    @property
    def t(self):
        return [w.denominator for w in self.weights]

    def __add__(self, other):
        return WeightSystem(self.weights + other.weights)

    def __eq__(self, other):
        return isinstance(other, WeightSystem) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return "WeightSystem(" + ", ".join(str(w) for w in self.weights) + ")"


@dataclass(frozen=True)
class Chain:
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if not self.a or any(x < 1 for x in self.a):
            raise ValidationError("chain exponents must be positive integers")

    def __str__(self):
        return "chain(" + ",".join(map(str, self.a)) + ")"


@dataclass(frozen=True)
class Cycle:
    a: tuple

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if len(a) < 2 or any(x < 1 for x in a):
            raise ValidationError("a cycle needs at least two positive exponents")
        if len(a) % 2 == 0:
            if all(a[j] == 1 for j in range(1, len(a), 2)):
                raise ValidationError(
                    "cycle with an even number of variables has a_j = 1 for all even j")
            if all(a[j] == 1 for j in range(0, len(a), 2)):
                raise ValidationError(
                    "cycle with an even number of variables has a_j = 1 for all odd j")

    def __str__(self):
        return "cycle(" + ",".join(map(str, self.a)) + ")"


@dataclass(frozen=True)
class Weights:
    """A bare weight system used as a summand."""
    system: WeightSystem

    def __str__(self):
        return "weights(" + ",".join(str(w) for w in self.system.weights) + ")"


@dataclass(frozen=True)
class Sum:
    left: object
    right: object

    def __str__(self):
        return f"{self.left}+{self.right}"


def leaves(expr):
    if isinstance(expr, Sum):
        return leaves(expr.left) + leaves(expr.right)
    return [expr]


def fold_sum(terms):
    terms = list(terms)
    if not terms:
        raise ValidationError("empty expression")
    out = terms[0]
    for t in terms[1:]:
        out = Sum(out, t)
    return out


# ---- chain type


@dataclass
class ChainData:
    b: list
    mu: int
    chi: dict
    M: tuple
    weights: WeightSystem


def chain_data(a):
    a = Chain(a).a
    n = len(a)
    b = [1]
    for i, x in enumerate(a):
        b.append(b[-1] * (x + 1 if i == 0 else x))
    mu = sum((-1) ** i * b[n - i] for i in range(n + 1))

    chi = {}
    for m in divisors(b[n]):
        chi[m] = next(i for i in range(n + 1) if b[i] % m == 0)
    M = tuple(m for m in sorted(chi) if chi[m] % 2 == n % 2)

    ws = [Fraction(1, a[0] + 1)]
    for x in a[1:]:
        ws.append((1 - ws[-1]) / x)
    return ChainData(b[1:], mu, chi, M, WeightSystem(ws))


# ---- cycle type


@dataclass
class CycleData:
    mu: int
    d: int
    v: list
    b: int
    exponent: dict
    covering: tuple
    weights: WeightSystem


def cycle_data(a):
    a = Cycle(a).a
    n = len(a)
    mu = prod(a)
    d = mu - (-1) ** n
    # v_{i+1} = d - a_i v_i, written as alpha + beta * v_1
    alpha, beta = Fraction(0), Fraction(1)
    coeffs = []
    for x in a:
        coeffs.append((alpha, beta))
        alpha, beta = d - x * alpha, -x * beta
    v1 = alpha / (1 - beta)
    v = [al + be * v1 for al, be in coeffs]
    if any(x.denominator != 1 or x <= 0 for x in v):
        raise ConsistencyError(f"cycle {a} gives non-positive or fractional weights {v}")
    v = [int(x) for x in v]
    g = gcd(v[0], d)
    if any(gcd(x, d) != g for x in v):
        raise ConsistencyError(f"cycle {a}: gcd(v_i, d) is not constant")
    b = d // g
    exponent = {l: g for l in divisors(b)}
    exponent[1] += 1 if n % 2 == 0 else -1
    exponent = {l: c for l, c in exponent.items() if c}
    full = tuple(divisors(b))
    if n % 2:
        covering = (full,) * (g - 1) + (full[1:],)
    else:
        covering = (full,) * g + ((1,),)
    return CycleData(mu, d, v, b, exponent, covering,
                     WeightSystem([Fraction(x, d) for x in v]))


# ---- weight systems


def milnor_orlik_lambda(w):
    """Coefficients of the Lambda_k in the product of (Lambda_t / s - Lambda_1)."""
    out = {1: Fraction(1)}
    for s, t in zip(w.s, w.t):
        nxt = {}
        for k, c in out.items():
            l = lcm(k, t)
            nxt[l] = nxt.get(l, 0) + c * Fraction(gcd(k, t), s)
            nxt[k] = nxt.get(k, 0) - c
        out = {k: c for k, c in nxt.items() if c}
    return dict(sorted(out.items()))


def milnor_orlik_divisor(w):
    """Divisor of the characteristic polynomial of the Milnor monodromy,
    expanded from the weights."""
    psi = {}
    for k, c in milnor_orlik_lambda(w).items():
        for d in divisors(k):
            psi[d] = psi.get(d, 0) + c
    bad = [(m, c) for m, c in psi.items() if c.denominator != 1 or c < 0]
    if bad:
        raise ConsistencyError(f"{w} expands to non-integral or negative multiplicities {bad}")
    return Divisor({m: int(c) for m, c in psi.items()})


def nu_map(chi):
    """Coefficients of chi in the Lambda basis (Moebius inversion)."""
    support = [m for m, c in chi.items() if c]
    ks = sorted({k for m in support for k in divisors(m)})
    out = {}
    for k in ks:
        v = sum(chi[m] * moebius(m // k) for m in support if m % k == 0)
        if v:
            out[k] = v
    return out


def nu_inverse(nu):
    out = {}
    for k, v in nu.items():
        for m in divisors(k):
            out[m] = out.get(m, 0) + v
    return {m: c for m, c in sorted(out.items()) if c}


def kouchnirenko_c2(w, max_vars=KOUCHNIRENKO_MAX_VARS):
    """Does the weight system satisfy Kouchnirenko's condition (C2)?"""
    n = w.n
    if n > max_vars:
        raise ValidationError(f"(C2) check limited to {max_vars} variables")
    D = lcm(*w.t)
    W = [int(x * D) for x in w.weights]
    targets = [D - x for x in W]
    mask = (1 << (D + 1)) - 1
    for size in range(1, n + 1):
        for J in combinations(range(n), size):
            reach = 1
            for j in J:
                step = W[j]
                while step <= D:
                    grown = (reach | (reach << step)) & mask
                    reach = grown
                    step *= 2
            hits = sum(1 for x in targets if reach >> x & 1)
            if hits < size:
                return False
    return True


def canonical_orders(w, M):
    """Canonical excellent orders for a weight system and its support M."""
    out = {}
    for p in sorted({p for m in M for p in factorize(m)}):
        s = max(valuation(p, m) for m in M)
        S = {k for k in range(s + 1) if sum(1 for t in w.t if t % p ** k == 0) % 2}
        out[p] = ords.ExcellentOrder(s, S)
    return out


# ---- expressions


def weight_system(expr):
    ws = []
    for leaf in leaves(expr):
        if isinstance(leaf, Chain):
            ws.extend(chain_data(leaf.a).weights.weights)
        elif isinstance(leaf, Cycle):
            ws.extend(cycle_data(leaf.a).weights.weights)
        elif isinstance(leaf, Weights):
            ws.extend(leaf.system.weights)
        elif isinstance(leaf, WeightSystem):
            ws.extend(leaf.weights)
        else:
            raise ValidationError(f"unknown expression {leaf!r}")
    return WeightSystem(ws)


def is_proved(expr):
    """True for sums of chains and cycles, where the decomposition is known to hold."""
    return all(isinstance(x, (Chain, Cycle)) for x in leaves(expr))


def _leaf_exponent(leaf):
    if isinstance(leaf, Chain):
        data = chain_data(leaf.a)
        chi = dict(milnor_orlik_divisor(data.weights).items())
        block = psi_power(data.M, data.mu)
        if chi != block:
            raise ConsistencyError(f"{leaf}: weight expansion {chi} != power of Orlik block {block}")
        return chi
    if isinstance(leaf, Cycle):
        data = cycle_data(leaf.a)
        chi = dict(milnor_orlik_divisor(data.weights).items())
        if chi != data.exponent:
            raise ConsistencyError(f"{leaf}: weight expansion {chi} != cycle formula {data.exponent}")
        return chi
    system = leaf.system if isinstance(leaf, Weights) else leaf
    if not kouchnirenko_c2(system):
        raise ValidationError(f"{system} admits no isolated singularity (condition C2 fails)")
    return dict(milnor_orlik_divisor(system).items())


def char_exponent(expr):
    if isinstance(expr, Sum):
        return tensor_exponent(char_exponent(expr.left), char_exponent(expr.right))
    return _leaf_exponent(expr)


def milnor_number(expr):
    if isinstance(expr, Sum):
        return milnor_number(expr.left) * milnor_number(expr.right)
    if isinstance(expr, Chain):
        return chain_data(expr.a).mu
    if isinstance(expr, Cycle):
        return prod(expr.a)
    system = expr.system if isinstance(expr, Weights) else expr
    return prod(1 / w - 1 for w in system.weights)


@dataclass
class StandardDecomposition:
    exponent: dict
    covering: tuple
    polynomials: list
    mu: int
    orders: dict
    compatible: bool
    status: str = "proved"
    extra: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "mu": self.mu,
            "chi": {str(m): c for m, c in sorted(self.exponent.items())},
            "covering": [list(s) for s in self.covering],
            "p_j": [list(p.coeffs) for p in self.polynomials],
            "orders": {str(p): o.to_json() for p, o in sorted(self.orders.items())},
            "compatible": self.compatible,
            "status": self.status,
        }


def decompose(expr):
    if isinstance(expr, WeightSystem):
        expr = Weights(expr)
    chi = char_exponent(expr)
    covering = ords.standard_covering(chi)
    polys = [exponent_to_poly({m: 1 for m in s}) for s in covering]
    w = weight_system(expr)
    orders = canonical_orders(w, list(chi))
    compatible = ords.is_map_compatible(chi, orders)
    if not compatible:
        raise ConsistencyError(f"{expr}: exponent map is not compatible with its canonical orders")
    mu = sum(p.degree for p in polys)
    if mu != milnor_number(expr):
        raise ConsistencyError(f"{expr}: rank {mu} differs from the Milnor number")
    status = "proved" if is_proved(expr) else "conjectural"
    return StandardDecomposition(chi, covering, polys, mu, orders, compatible, status)


# ---- link homology


@dataclass
class LinkHomology:
    l: int
    torsion: list
    status: str = "proved"

    def to_json(self):
        return {"l": self.l, "torsion": self.torsion}


def phi1_multiplicity_from_weights(w):
    """Multiplicity of Phi_1, summed over subsets of the weights."""
    n = w.n
    total = Fraction(0)
    for size in range(n + 1):
        for I in combinations(range(n), size):
            den = prod((w.weights[i] for i in I), start=Fraction(1)) * lcm(*(w.t[i] for i in I))
            total += Fraction((-1) ** (n - size)) / den
    return total


def link_homology(expr):
    if isinstance(expr, WeightSystem):
        expr = Weights(expr)
    w = weight_system(expr)
    if w.n < 3:
        raise ValidationError("link homology needs at least three variables")
    dec = decompose(expr)
    l = phi1_multiplicity_from_weights(w)
    if l.denominator != 1 or l < 0 or int(l) != dec.exponent.get(1, 0):
        raise ConsistencyError(
            f"{expr}: subset sum gives {l}, exponent map gives {dec.exponent.get(1, 0)}")
    l = int(l)
    torsion = [prod(cyclo_at_one(m) for m in s) for s in dec.covering[l:]]
    for big, small in zip(torsion, torsion[1:]):
        if big % small:
            raise ConsistencyError(f"{expr}: torsion {torsion} is not a divisibility chain")
    return LinkHomology(l, torsion, dec.status)
