"""Excellent orders, compatibility of block sets and exponent maps, and
compatible coverings.

An excellent order on {0, .., s} is fixed by a set S: the elements of
S together with 0 come first in decreasing order, then the remaining
elements in increasing order.  A tuple of such orders is a plain dict
{p: ExcellentOrder}.
"""

from dataclasses import dataclass

from .errors import ValidationError
from .polyarith import factorize, is_prime, valuation
from .sdiob import block_set, pi_p

COVERING_CAP = 10 ** 5


@dataclass(frozen=True)
class ExcellentOrder:
    s: int
    S: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(self.S))
        if self.s < 0:
            raise ValidationError("order bound must be nonnegative")
        if any(k < 0 or k > self.s for k in self.S):
            raise ValidationError(f"S = {sorted(self.S)} is not inside [0, {self.s}]")

    @property
    def top(self):
        """The maximal element s+."""
        return max(self.S - {0}, default=0)

    def sequence(self):
        """All of [0, s] from largest to smallest."""
        upper = self.S | {0}
        return sorted(upper, reverse=True) + [k for k in range(self.s + 1) if k not in upper]

    def rank(self, k):
        """Position of k in sequence(); smaller means larger in the order."""
        upper = self.S | {0}
        if k in upper:
            return sum(1 for x in upper if x > k)
        return len(upper) + sum(1 for x in range(k) if x not in upper)

    def to_json(self):
        return {"s": self.s, "S": sorted(self.S, reverse=True)}


TRIVIAL = ExcellentOrder(0)


def compare(o, a, b):
    """1 if a is above b in the order, -1 if below, 0 if equal."""
    for x in (a, b):
        if not 0 <= x <= o.s:
            raise ValidationError(f"{x} is outside [0, {o.s}]")
    if a == b:
        return 0
    upper = o.S | {0}
    ia, ib = a in upper, b in upper
    if ia != ib:
        return 1 if ia else -1
    if ia:
        return 1 if a > b else -1
    return 1 if a < b else -1


def tensor_order(o1, o2):
    return ExcellentOrder(max(o1.s, o2.s), o1.S ^ o2.S)


def is_subset_compatible(K, o):
    """Is K an up-set of the order (or all of [0, s])?"""
    K = set(K)
    seq = o.sequence()
    return len(K) <= len(seq) and K == set(seq[:len(K)])


def _check_primes(support, orders):
    for p in orders:
        if not is_prime(p):
            raise ValidationError(f"{p} is not prime")
    for m in support:
        for p in factorize(m):
            if p not in orders:
                raise ValidationError(f"prime {p} of {m} has no order")


def _in_quadrant(m, orders):
    return all(valuation(p, m) <= o.s for p, o in orders.items())


def _above(m, orders):
    """Sources of all quadrant edges ending in m."""
    for p, o in orders.items():
        k = valuation(p, m)
        base = pi_p(p, m)
        r = o.rank(k)
        for j in o.sequence()[:r]:
            yield base * p ** j


def quadrant(orders, limit=4096):
    """(V, E_V, center) for a tuple of excellent orders."""
    size = 1
    for o in orders.values():
        size *= o.s + 1
    if size > limit:
        raise ValidationError(f"quadrant has {size} vertices, limit is {limit}")
    vertices = [1]
    for p, o in sorted(orders.items()):
        vertices = [v * p ** k for v in vertices for k in range(o.s + 1)]
    vertices.sort()
    edges = sorted((a, b) for b in vertices for a in _above(b, orders))
    center = 1
    for p, o in orders.items():
        center *= p ** o.top
    return vertices, edges, center


def is_set_compatible(M, orders):
    M = set(block_set(M))
    _check_primes(M, orders)
    if not all(_in_quadrant(m, orders) for m in M):
        return False
    return all(a in M for b in M for a in _above(b, orders))


def is_map_compatible(chi, orders):
    support = [m for m, c in chi.items() if c]
    _check_primes(support, orders)
    if not all(_in_quadrant(m, orders) for m in support):
        return False
    return all(chi.get(a, 0) >= chi[b] for b in support for a in _above(b, orders))


def standard_covering(chi):
    support = {m: c for m, c in chi.items() if c}
    if not support:
        raise ValidationError("exponent map has empty support")
    if any(c < 0 for c in support.values()):
        raise ValidationError("exponent map takes nonnegative values")
    top = max(support.values())
    return tuple(tuple(sorted(m for m, c in support.items() if c >= j))
                 for j in range(1, top + 1))


def _components(chi, orders):
    """Connected pieces of the level sets of chi, ordered canonically."""
    support = sorted(m for m, c in chi.items() if c)
    seen = set()
    comps = []
    for start in support:
        if start in seen:
            continue
        level = chi[start]
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            m = stack.pop()
            comp.append(m)
            for p, o in orders.items():
                base = pi_p(p, m)
                for k in range(o.s + 1):
                    x = base * p ** k
                    if x not in seen and chi.get(x, 0) == level:
                        seen.add(x)
                        stack.append(x)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: (-chi[c[0]], c))
    return comps


def _ideals(n, preds):
    """All non-empty sets of component indices closed under predecessors."""
    out = []

    def grow(i, chosen):
        if i == n:
            if chosen:
                out.append(frozenset(chosen))
            return
        grow(i + 1, chosen)
        if preds[i] <= chosen:
            chosen.add(i)
            grow(i + 1, chosen)
            chosen.discard(i)
        if len(out) > COVERING_CAP:
            raise ValidationError("too many closed component sets")

    # components are sorted by decreasing level, so predecessors come first
    grow(0, set())
    return out


def enumerate_compatible_coverings(chi, orders, cap=COVERING_CAP):
    """Every covering of chi whose sets are all compatible with the orders,
    in a canonical sorted order.  The standard covering is among them."""
    chi = {m: c for m, c in chi.items() if c}
    if not is_map_compatible(chi, orders):
        raise ValidationError("exponent map is not compatible with the orders")
    comps = _components(chi, orders)
    where = {m: i for i, c in enumerate(comps) for m in c}
    preds = [set() for _ in comps]
    for i, comp in enumerate(comps):
        for b in comp:
            for a in _above(b, orders):
                j = where.get(a)
                if j is not None and j != i:
                    preds[i].add(j)
    # edges between components strictly decrease the level, so this is a DAG
    # and every predecessor has a smaller index
    ideals = _ideals(len(comps), preds)
    need = [chi[c[0]] for c in comps]
    length = max(need)
    found = set()

    def pick(start, left, counts, chosen):
        if left == 0:
            if counts == need:
                sets = [tuple(sorted(m for i in ideal for m in comps[i])) for ideal in chosen]
                found.add(tuple(sorted(sets, key=lambda s: (-len(s), s))))
                if len(found) > cap:
                    raise ValidationError(f"more than {cap} coverings")
            return
        for idx in range(start, len(ideals)):
            ideal = ideals[idx]
            if any(counts[i] >= need[i] for i in ideal):
                continue
            for i in ideal:
                counts[i] += 1
            chosen.append(ideal)
            pick(idx, left - 1, counts, chosen)
            chosen.pop()
            for i in ideal:
                counts[i] -= 1

    pick(0, length, [0] * len(comps), [])
    return sorted(found, key=lambda cov: [(-len(s), s) for s in cov])


def _g(K):
    k = 0
    if 0 in K:
        while k + 1 in K:
            k += 1
    else:
        while k + 1 not in K and k + 1 <= max(K):
            k += 1
    return k


def infer_orders(M):
    """A tuple of excellent orders making M compatible, or None.

    For each prime the order is read off from the fiber whose exponent
    set has the shortest initial run, preferring fibers that miss 0.
    """
    M = block_set(M)
    out = {}
    primes = sorted({p for m in M for p in factorize(m)})
    for p in primes:
        fibers = {}
        for m in M:
            fibers.setdefault(pi_p(p, m), set()).add(valuation(p, m))
        s = max(max(K) for K in fibers.values())
        g = {m0: _g(K) for m0, K in fibers.items()}
        gmin = min(g.values())
        candidates = [m0 for m0 in sorted(fibers) if g[m0] == gmin and 0 not in fibers[m0]]
        candidates += [m0 for m0 in sorted(fibers) if g[m0] == gmin and 0 in fibers[m0]]
        for m0 in candidates:
            o = ExcellentOrder(s, fibers[m0] - {0})
            if all(is_subset_compatible(K, o) for K in fibers.values()):
                out[p] = o
                break
        else:
            return None
    if not is_set_compatible(M, out):
        return None
    return out


def infer_map_orders(chi, limit=4096):
    """A tuple of excellent orders making the exponent map compatible, or None.

    Tries infer_orders on the support first, then every choice of S per
    prime (subsets of [1, s]; 0 plays no role in the order).
    """
    support = block_set(m for m, c in chi.items() if c)
    first = infer_orders(support)
    if first is not None and is_map_compatible(chi, first):
        return first
    primes = sorted({p for m in support for p in factorize(m)})
    tops = {p: max(valuation(p, m) for m in support) for p in primes}
    choices = [[]]
    for p in primes:
        s = tops[p]
        subsets = [frozenset(k for k in range(1, s + 1) if mask >> (k - 1) & 1)
                   for mask in range(2 ** s)]
        choices = [c + [(p, ExcellentOrder(s, S))] for c in choices for S in subsets]
        if len(choices) > limit:
            raise ValidationError(f"more than {limit} order tuples to try")
    for c in choices:
        orders = dict(c)
        if is_map_compatible(chi, orders):
            return orders
    return None
