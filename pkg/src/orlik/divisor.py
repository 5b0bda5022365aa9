"""The ring spanned by Psi_m = div(Phi_m), the divisors of cyclotomic polynomials.

A divisor sum_m c_m Psi_m is a sparse map m -> c_m with zero entries
dropped.  Lambda_m = div(t^m - 1) expands as the sum of Psi_d over d | m.
Exponent maps (multiplicities of Phi_m in a characteristic polynomial)
are plain dicts with nonnegative values.
"""

from functools import lru_cache
from math import gcd

from .errors import ValidationError
from .polyarith import (IntPolynomial, cyclotomic, divisors, euler_phi,
                        factorize, lcm, product)


class Divisor:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {int(m): c for m, c in sorted((coeffs or {}).items()) if c}
        if any(m < 1 for m in self.coeffs):
            raise ValidationError("divisor keys must be positive integers")

    def __getitem__(self, m):
        return self.coeffs.get(m, 0)

    def __iter__(self):
        return iter(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def support(self):
        return sorted(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, dict):
            other = Divisor(other)
        return isinstance(other, Divisor) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for m, c in other.items():
            out[m] = out.get(m, 0) + c
        return Divisor(out)

    def __neg__(self):
        return Divisor({m: -c for m, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Divisor):
            return mul(self, other)
        return Divisor({m: other * c for m, c in self.items()})

    __rmul__ = __mul__

    def degree(self):
        return degree(self)

    def to_json(self):
        return {str(m): c for m, c in self.items()}

    def __repr__(self):
        return f"Divisor({self.coeffs})"


def psi(m):
    return Divisor({m: 1})


def lambda_div(m):
    return Divisor({d: 1 for d in divisors(m)})


def degree(d):
    return sum(c * euler_phi(m) for m, c in d.items())


def beta(m, n):
    """Product of p^v_p(m) over primes with v_p(m) = v_p(n) > 0."""
    fm, fn = factorize(m), factorize(n)
    out = 1
    for p, k in fm.items():
        if fn.get(p) == k:
            out *= p ** k
    return out


def delta(m, n, l):
    """Multiplicity of Psi_l in Psi_m * Psi_n."""
    big = lcm(m, n)
    if big % l:
        return 0
    c = big // l
    b = beta(m, n)
    if b % c:
        return 0
    out = euler_phi(gcd(m, n))
    for p in factorize(b):
        if c % p:
            out = out // (p - 1) * (p - 2)
    return out


@lru_cache(maxsize=65536)
def psi_product(m, n):
    """Psi_m * Psi_n as a tuple of (l, multiplicity) pairs, l ascending."""
    big = lcm(m, n)
    out = []
    for c in divisors(beta(m, n)):
        l = big // c
        d = delta(m, n, l)
        if d:
            out.append((l, d))
    return tuple(sorted(out))


def mul(d1, d2):
    out = {}
    for m, a in d1.items():
        for n, b in d2.items():
            for l, d in psi_product(m, n):
                out[l] = out.get(l, 0) + a * b * d
    return Divisor(out)


def tensor_exponent(chi1, chi2):
    """Exponent map of the tensor product of two lattices with the given
    characteristic exponent maps."""
    if not any(chi1.values()) or not any(chi2.values()):
        raise ValidationError("exponent maps must have non-empty support")
    for chi in (chi1, chi2):
        if any(v < 0 for v in chi.values()):
            raise ValidationError("exponent maps take nonnegative values")
    return dict(mul(Divisor(chi1), Divisor(chi2)).items())


def chi_of(M, N):
    """(L, chi) where chi(l) sums delta(m, n, l) over M x N."""
    chi = tensor_exponent({m: 1 for m in M}, {n: 1 for n in N})
    return sorted(chi), chi


def exponent_to_poly(chi):
    if any(v < 0 for v in chi.values()):
        raise ValidationError("negative exponent")
    return product(cyclotomic(m) ** k for m, k in sorted(chi.items()) if k)


def poly_to_exponent(p):
    """Exponent map of a product of cyclotomic polynomials, by trial division."""
    if not isinstance(p, IntPolynomial) or not p.is_unitary():
        raise ValidationError("expected a unitary polynomial")
    chi = {}
    rest = p
    m = 1
    bound = 2 * p.degree ** 2 + 2
    while rest.degree > 0:
        if m > bound:
            raise ValidationError(f"{p} is not a product of cyclotomic polynomials")
        phi = cyclotomic(m)
        while True:
            q, r = divmod(rest, phi)
            if not r.is_zero():
                break
            rest = q
            chi[m] = chi.get(m, 0) + 1
        m += 1
    if rest != 1:
        raise ValidationError(f"{p} is not a product of cyclotomic polynomials")
    return chi
