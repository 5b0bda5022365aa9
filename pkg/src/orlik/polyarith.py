"""Integer polynomials, cyclotomic polynomials and their resultants.

A polynomial a_0 + a_1 t + ... + a_n t^n is stored as the tuple
(a_0, ..., a_n) with a_n != 0; the zero polynomial is the empty tuple.
"""

from functools import lru_cache
from math import gcd, isqrt

from . import matrix
from .errors import ValidationError


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k, a=1):
        return cls([0] * k + [a])

    @classmethod
    def constant(cls, a):
        return cls([a])

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_unitary(self):
        return self.leading == 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * x for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        """Division with remainder by a unitary polynomial."""
        other = _coerce(other)
        if not other.is_unitary():
            raise ValidationError("divisor must be unitary")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return IntPolynomial(), IntPolynomial(rem)
        quo = [0] * (len(rem) - db)
        b = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db]
            if q:
                quo[k] = q
                for i in range(db + 1):
                    rem[k + i] -= q * b[i]
        return IntPolynomial(quo), IntPolynomial(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValidationError(f"{other} does not divide {self}")
        return q

    def derivative(self):
        return IntPolynomial([i * x for i, x in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{k}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x):
    return IntPolynomial([x]) if isinstance(x, int) else x


ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@lru_cache(maxsize=None)
def factorize(m):
    """Prime factorization {p: k} by trial division."""
    if m < 1:
        raise ValidationError(f"expected a positive integer, got {m}")
    out = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def primes_of(m):
    return sorted(factorize(m))


def valuation(p, m):
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if m < 1:
        raise ValidationError(f"expected a positive integer, got {m}")
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def euler_phi(m):
    if m < 1:
        raise ValidationError(f"euler_phi needs m >= 1, got {m}")
    out = m
    for p in factorize(m):
        out = out // p * (p - 1)
    return out


def moebius(m):
    f = factorize(m)
    if any(k > 1 for k in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(m):
    divs = [1]
    for p, k in factorize(m).items():
        divs = [d * p ** i for d in divs for i in range(k + 1)]
    return sorted(divs)


def prime_power(x):
    """(p, k) if x = p^k with k >= 1, else None."""
    if x < 2:
        return None
    f = factorize(x)
    if len(f) != 1:
        return None
    return next(iter(f.items()))


def lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


@lru_cache(maxsize=None)
def cyclotomic(m):
    """Phi_m, from t^m - 1 divided by Phi_d for all proper divisors d of m."""
    if m < 1:
        raise ValidationError(f"cyclotomic needs m >= 1, got {m}")
    p = IntPolynomial.monomial(m) - 1
    for d in divisors(m)[:-1]:
        p = p.exact_div(cyclotomic(d))
    return p


def sylvester_matrix(f, g):
    """The (m+n) x (m+n) matrix whose columns are f, tf, .., t^(n-1) f,
    g, tg, .., t^(m-1) g written in the basis 1, t, .., t^(m+n-1)."""
    m, n = f.degree, g.degree
    size = m + n
    cols = []
    for poly, count in ((f, n), (g, m)):
        for shift in range(count):
            col = [0] * size
            for i, c in enumerate(poly.coeffs):
                col[shift + i] = c
            cols.append(col)
    return matrix.from_columns(cols, size)


def resultant(f, g):
    """Res(f, g), normalised so that for unitary f, g it equals
    prod (a_i - b_j) over the roots a_i of f and b_j of g.

    With columns in ascending degree order the Sylvester determinant
    differs from that product by (-1)^(deg f * deg g); the sign is
    restored here.
    """
    if f.is_zero() or g.is_zero():
        raise ValidationError("resultant of the zero polynomial")
    m, n = f.degree, g.degree
    if m + n == 0:
        return 1
    # the transpose has the same determinant and eliminates faster
    d = matrix.det(matrix.transpose(sylvester_matrix(f, g)))
    return -d if (m * n) % 2 else d


def discriminant(f):
    if f.degree < 1:
        raise ValidationError("discriminant needs degree >= 1")
    return resultant(f, f.derivative())


def cyclo_resultant(m, n):
    """Res(Phi_m, Phi_n) in closed form."""
    if m == n:
        return 0
    if (m, n) == (1, 2):
        return 2
    if (m, n) == (2, 1):
        return -2
    small, big = min(m, n), max(m, n)
    if big % small == 0:
        pk = prime_power(big // small)
        if pk:
            return pk[0] ** euler_phi(small)
    return 1


def cyclo_discriminant(m):
    """|discr(Phi_m)|, assembled prime by prime."""
    phi = euler_phi(m)
    out = 1
    for p, v in factorize(m).items():
        out *= p ** (v * phi - phi // (p - 1))
    return out


def cyclo_at_one(m):
    if m == 1:
        return 0
    pk = prime_power(m)
    return pk[0] if pk else 1


def lambda_count(m, n, p, k):
    """Number of pairs of primitive m-th and n-th unit roots whose quotient
    has order p^k, divided by phi(p^k)."""
    if m < 2 or n < 2 or k < 1 or not is_prime(p):
        raise ValidationError("lambda_count needs m, n >= 2, p prime, k >= 1")
    if m == n:
        v = valuation(p, m)
        if v < k:
            return 0
        if v == k:
            return euler_phi(m) * (p - 2) // (p - 1)
        return euler_phi(m)
    small, big = min(m, n), max(m, n)
    if big % small:
        return 0
    pk = prime_power(big // small)
    if pk is None:
        return 0
    q = pk[0]
    if p == q and k == valuation(q, big):
        return euler_phi(small)
    return 0


def product(polys):
    out = ONE
    for p in polys:
        out = out * p
    return out


def cyclotomic_product(ms):
    return product(cyclotomic(m) for m in ms)
