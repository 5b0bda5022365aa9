"""Deterministic instance generators for sweeps and acceptance runs."""

import random
from math import prod

from .errors import ValidationError
from .singular import Chain, Cycle, fold_sum, milnor_number

MAX_LENGTH = 3


def chain_tuples(max_b=200, max_length=MAX_LENGTH):
    """All chain exponent tuples with b_n <= max_b and n <= max_length."""
    out = []

    def grow(a, b):
        if a:
            out.append(tuple(a))
        if len(a) == max_length:
            return
        x = 1
        while True:
            nb = b * (x + 1 if not a else x)
            if nb > max_b:
                break
            grow(a + [x], nb)
            x += 1

    grow([], 1)
    return sorted(out, key=lambda a: (len(a), a))


def cycle_tuples(max_mu=200, max_length=MAX_LENGTH):
    """All cycle exponent tuples with prod(a) <= max_mu, 2 <= n <= max_length."""
    out = []

    def grow(a, m):
        if len(a) >= 2:
            try:
                out.append(Cycle(tuple(a)).a)
            except ValidationError:
                pass
        if len(a) == max_length:
            return
        x = 1
        while m * x <= max_mu:
            grow(a + [x], m * x)
            x += 1

    grow([], 1)
    return sorted(out, key=lambda a: (len(a), a))


def _random_leaf(rng, max_mu):
    for _ in range(1000):
        if rng.random() < 0.6:
            n = rng.randint(1, 3)
            leaf = Chain(tuple(rng.randint(1, 6) for _ in range(n)))
        else:
            n = rng.randint(2, 3)
            try:
                leaf = Cycle(tuple(rng.randint(1, 5) for _ in range(n)))
            except ValidationError:
                continue
        if milnor_number(leaf) <= max_mu:
            return leaf
    raise ValidationError(f"no leaf with Milnor number <= {max_mu}")


def random_expressions(count, max_mu, seed=0, max_terms=4):
    """count random chain/cycle/sum expressions with Milnor number <= max_mu.

    Leaves with Milnor number 1 are allowed (they are A_1 summands).
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.randint(1, max_terms)
        terms = []
        for _ in range(k):
            budget = max_mu // max(1, prod(milnor_number(t) for t in terms))
            if budget < 1:
                break
            terms.append(_random_leaf(rng, budget))
        expr = fold_sum(terms)
        if milnor_number(expr) <= max_mu:
            out.append(expr)
    return out


def small_suite(max_mu=16, seed=0, random_count=150):
    """Chains, cycles and random sums with Milnor number <= max_mu,
    de-duplicated by their printed form."""
    exprs = [Chain(a) for a in chain_tuples(max_b=4 * max_mu)]
    exprs = [e for e in exprs if milnor_number(e) <= max_mu]
    exprs += [Cycle(a) for a in cycle_tuples(max_mu)]
    exprs += random_expressions(random_count, max_mu, seed)
    seen, out = set(), []
    for e in exprs:
        if str(e) not in seen:
            seen.add(str(e))
            out.append(e)
    return out
