"""Dense integer matrices as lists of rows of Python ints.

Everything here is exact.  Matrices are never mutated in place by the
public functions; each returns fresh lists.
"""

from math import gcd


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def shape(a):
    return (len(a), len(a[0]) if a else 0)


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def kron(a, b):
    """Kronecker product; row index (i, k) of a (x) b is i * rows(b) + k."""
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def kron_vec(u, v):
    return [x * y for x in u for y in v]


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[off + i][off:off + len(row)] = row
        off += len(b)
    return out


def from_columns(cols, rows=None):
    if not cols:
        return [[] for _ in range(rows or 0)]
    return [list(r) for r in zip(*cols)]


def columns(a):
    return transpose(a)


def matpow(a, e):
    result = identity(len(a))
    base = a
    while e:
        if e & 1:
            result = matmul(result, base)
        e >>= 1
        if e:
            base = matmul(base, base)
    return result


def det(a):
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        # the smallest pivot keeps intermediate entries short
        best = None
        for i in range(k, n):
            x = m[i][k]
            if x and (best is None or abs(x) < abs(m[best][k])):
                best = i
                if abs(x) == 1:
                    break
        if best is None:
            return 0
        if best != k:
            m[k], m[best] = m[best], m[k]
            sign = -sign
        piv = m[k][k]
        rowk = m[k]
        tail = rowk[k + 1:]
        for i in range(k + 1, n):
            rowi = m[i]
            f = rowi[k]
            if f == 0:
                if piv != prev:
                    m[i] = rowi[:k + 1] + [x * piv // prev for x in rowi[k + 1:]]
            else:
                m[i] = rowi[:k + 1] + [(piv * x - f * y) // prev
                                       for x, y in zip(rowi[k + 1:], tail)]
        prev = piv
    return sign * m[-1][-1]


def smith_normal_form(a):
    """Return (D, U, V) with U * a * V == D, U and V unimodular.

    D is diagonal (rectangular like ``a``) with nonnegative entries
    d_1 | d_2 | ... ; zero entries come last.
    """
    rows, cols = shape(a)
    d = [list(r) for r in a]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for mat in (d, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        d[dst] = [x - q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for mat in (d, v):
            for row in mat:
                row[dst] -= q * row[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = d[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best and best[0] == 1:
                    break
            if best is None:
                return d, u, v
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    add_row(i, t, d[i][t] // p)
                    dirty = dirty or d[i][t] != 0
            for j in range(t + 1, cols):
                if d[t][j]:
                    add_col(j, t, d[t][j] // p)
                    dirty = dirty or d[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, rows)
                        if any(d[i][j] % p for j in range(t + 1, cols))), None)
            if bad is None:
                break
            add_row(t, bad, -1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return d, u, v


def invariant_factors(a):
    d, _, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(shape(a))) if d[i][i]]


def rank(a):
    return len(invariant_factors(a)) if a and a[0] else 0


def solve_integer(a, b):
    """Some integer x with a * x == b, or None if there is none."""
    rows, cols = shape(a)
    if cols == 0:
        return [] if not any(b) else None
    d, u, v = smith_normal_form(a)
    ub = matvec(u, b)
    y = [0] * cols
    for i in range(rows):
        di = d[i][i] if i < cols else 0
        if di == 0:
            if ub[i] != 0:
                return None
        else:
            q, r = divmod(ub[i], di)
            if r:
                return None
            y[i] = q
    return matvec(v, y)


def kernel_basis(a):
    """Columns spanning the (primitive) integer kernel of ``a``."""
    rows, cols = shape(a)
    d, _, v = smith_normal_form(a)
    r = sum(1 for i in range(min(rows, cols)) if d[i][i])
    return [[v[i][j] for i in range(cols)] for j in range(r, cols)]


def is_primitive(cols, n):
    """Do the given integer columns span a primitive sublattice of Z^n?"""
    if not cols:
        return True
    f = invariant_factors(from_columns(cols, n))
    return len(f) == len(cols) and all(x == 1 for x in f)


def content(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
