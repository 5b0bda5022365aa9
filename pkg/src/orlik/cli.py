"""Command-line front end.

Exit codes: 0 on success, 1 for invalid input, 2 when an identity that
must hold is found violated (a bug, or a counterexample worth keeping).
"""

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from .certify import certify
from .divisor import exponent_to_poly
from .errors import ConsistencyError, ValidationError
from .lattice import DET_RANK_CAP, power_basis_check, tensor_basis_check
from .orders import (ExcellentOrder, enumerate_compatible_coverings, infer_map_orders,
                     is_map_compatible)
from .polyarith import euler_phi
from .sdiob import block_set, is_sdiob_power, is_sdiob_tensor
from .singular import (Chain, Cycle, Weights, WeightSystem, char_exponent, decompose,
                       fold_sum, link_homology, milnor_number, weight_system)
from .suite import small_suite

SAFE_INT = 2 ** 53
MAX_PRINTED_DEGREE = 10_000

_TOKEN = re.compile(r"\s*(?:(?P<word>[a-z]+)|(?P<num>\d+(?:/\d+)?)|(?P<sym>[(),+]))")


def _tokens(text):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValidationError(f"unexpected character {text[pos:].lstrip()[:1]!r} at position {pos}")
        kind = m.lastgroup
        yield kind, m.group(kind), m.start(kind)
        pos = m.end()
    yield "end", "", len(text)


class _ExprParser:
    def __init__(self, text):
        self.toks = list(_tokens(text))
        self.i = 0

    def peek(self):
        return self.toks[self.i][1]

    def expect(self, kind, value=None):
        k, v, p = self.toks[self.i]
        if k != kind or (value is not None and v != value):
            raise ValidationError(
                f"expected {value or kind!r} at position {p}, found {v or 'end of input'!r}")
        self.i += 1
        return v, p

    def term(self):
        name, pos = self.expect("word")
        if name not in ("chain", "cycle", "weights"):
            raise ValidationError(f"unknown term {name!r} at position {pos}")
        self.expect("sym", "(")
        args = [self.expect("num")]
        while self.peek() == ",":
            self.i += 1
            args.append(self.expect("num"))
        self.expect("sym", ")")
        if name == "weights":
            return Weights(WeightSystem([Fraction(v) for v, _ in args]))
        for v, p in args:
            if "/" in v:
                raise ValidationError(f"{name} takes integers, got {v!r} at position {p}")
        ints = [int(v) for v, _ in args]
        return Chain(ints) if name == "chain" else Cycle(ints)

    def expr(self):
        terms = [self.term()]
        while self.peek() == "+":
            self.i += 1
            terms.append(self.term())
        self.expect("end")
        return fold_sum(terms)


def parse_expr(text):
    """Parse 'chain(..)', 'cycle(..)', 'weights(..)' terms joined by '+'."""
    return _ExprParser(text).expr()


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValidationError(f"expected a comma-separated list of integers, got {text!r}")


def _parse_chi(text):
    chi = {}
    for part in text.split(","):
        try:
            m, c = part.split(":")
            chi[int(m)] = chi.get(int(m), 0) + int(c)
        except ValueError:
            raise ValidationError(f"bad exponent entry {part!r}, expected m:count")
    if any(m < 1 or c < 0 for m, c in chi.items()):
        raise ValidationError("exponent map needs positive keys and nonnegative counts")
    return chi


def _parse_order(text):
    """'p=s' or 'p=s:k1,k2'."""
    try:
        p, rest = text.split("=")
        s, _, ks = rest.partition(":")
        return int(p), ExcellentOrder(int(s), frozenset(_ints(ks)))
    except ValueError:
        raise ValidationError(f"bad order {text!r}, expected p=s or p=s:k1,k2")


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= SAFE_INT else x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    raise TypeError(f"cannot serialise {type(x).__name__}")


def _edge_json(edge):
    return None if edge is None else {"p": edge.p, "edge": [edge.a, edge.b]}


# ---- subcommands


def cmd_charpoly(args):
    expr = parse_expr(args.expr)
    chi = char_exponent(expr)
    mu = milnor_number(expr)
    # coefficients are only spelled out for moderate degree
    poly = list(exponent_to_poly(chi).coeffs) if mu <= MAX_PRINTED_DEGREE else None
    return {
        "expr": str(expr),
        "mu": mu,
        "chi": {m: c for m, c in sorted(chi.items())},
        "polynomial": poly,
    }


def cmd_decompose(args):
    return decompose(parse_expr(args.expr)).to_json()


def cmd_check_power(args):
    M = block_set(_ints(args.m))
    ok, witness = is_sdiob_power(M, args.mu)
    out = {"sufficient": ok, "witness": _edge_json(witness)}
    if args.det:
        out["det"] = power_basis_check(M, args.mu)[0]
    return out


def cmd_check_tensor(args):
    M, N = block_set(_ints(args.m)), block_set(_ints(args.n))
    ok, witness = is_sdiob_tensor(M, N)
    out = {"sufficient": ok, "witness": _edge_json(witness)}
    if args.det:
        out["det"], out["predicted"] = tensor_basis_check(M, N)
    return out


def cmd_coverings(args):
    chi = _parse_chi(args.chi)
    if args.order:
        orders = dict(_parse_order(o) for o in args.order)
    else:
        orders = infer_map_orders(chi)
        if orders is None:
            raise ValidationError("no tuple of excellent orders makes the exponent map compatible")
    if not is_map_compatible(chi, orders):
        raise ValidationError("exponent map is not compatible with the orders")
    covs = enumerate_compatible_coverings(chi, orders)
    return {
        "orders": {str(p): o.to_json() for p, o in sorted(orders.items())},
        "coverings": [[list(s) for s in cov] for cov in covs],
    }


def cmd_link(args):
    return link_homology(parse_expr(args.expr)).to_json()


def cmd_verify(args):
    expr = parse_expr(args.expr)
    cert = certify(expr, cap=args.max_rank)
    out = cert.to_json()
    out["U"] = cert.conjugation.U
    out["h"] = cert.h
    return out


def _sweep(args, emit):
    rng = random.Random(args.seed)
    summary = {"instances": 0, "certified": 0, "link_checked": 0,
               "power_checked": 0, "tensor_checked": 0, "evidence": 0}
    for expr in small_suite(max_mu=args.max_mu, seed=args.seed):
        summary["instances"] += 1
        dec = decompose(expr)
        if not is_map_compatible(dec.exponent, dec.orders):
            raise ConsistencyError(f"{expr}: exponent map not compatible with canonical orders")
        if weight_system(expr).n >= 3:
            link_homology(expr)
            summary["link_checked"] += 1
        if dec.mu <= args.max_rank:
            certify(expr, cap=args.max_rank)
            summary["certified"] += 1
    pool = [m for m in range(1, 41) if euler_phi(m) <= 8]
    small = [m for m in pool if euler_phi(m) <= 4]
    for _ in range(60):
        M = block_set(rng.sample(pool, rng.randint(1, 3)))
        if sum(euler_phi(m) for m in M) > args.max_rank:
            continue
        mu = rng.randint(1, 12)
        ok, witness = is_sdiob_power(M, mu)
        d = power_basis_check(M, mu, cap=args.max_rank)[0]
        summary["power_checked"] += 1
        if ok and abs(d) != 1:
            raise ConsistencyError(f"power basis for {M}, mu={mu}: sufficient but det {d}")
        if not ok:
            summary["evidence"] += 1
            emit({"kind": "power", "M": list(M), "mu": mu, "witness": _edge_json(witness),
                  "det": d})
        N = block_set(rng.sample(small, rng.randint(1, 2)))
        rank = sum(euler_phi(m) for m in M) * sum(euler_phi(n) for n in N)
        if rank <= args.max_rank:
            tensor_basis_check(M, N, cap=args.max_rank)
            summary["tensor_checked"] += 1
    return summary


def cmd_sweep(args):
    lines = []
    summary = _sweep(args, lines.append)
    if args.out:
        with open(args.out, "a") as fh:
            for line in lines:
                fh.write(json.dumps(_jsonable(line), separators=(",", ":")) + "\n")
        args.out = None
    summary["findings"] = lines
    return summary


# ---- plumbing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--out", help="also write the output to this file")

    parser = _Parser(prog="orlik", description="Standard decompositions into Orlik blocks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.set_defaults(func=func)
        return p

    for name, func, text in (("charpoly", cmd_charpoly, "exponent map and characteristic polynomial"),
                             ("decompose", cmd_decompose, "standard decomposition"),
                             ("link", cmd_link, "homology of the link")):
        add(name, func, text).add_argument("expr")

    p = add("verify", cmd_verify, "build and check an explicit lattice certificate")
    p.add_argument("expr")
    p.add_argument("--max-rank", type=int, default=16)

    p = add("check-power", cmd_check_power, "sufficiency for a power of an Orlik block")
    p.add_argument("--m", required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--det", action="store_true", help="also compute the basis determinant")

    p = add("check-tensor", cmd_check_tensor, "sufficiency for a tensor product of Orlik blocks")
    p.add_argument("--m", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--det", action="store_true", help="also compute the basis determinant")

    p = add("coverings", cmd_coverings, "coverings compatible with excellent orders")
    p.add_argument("--chi", required=True, help="exponent map, e.g. 1:2,3:1")
    p.add_argument("--order", action="append", help="p=s or p=s:k1,k2; repeatable")

    p = add("sweep", cmd_sweep, "bounded property sweep")
    p.add_argument("--max-mu", type=int, default=24)
    p.add_argument("--max-rank", type=int, default=DET_RANK_CAP)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _table(data, prefix=""):
    lines = []
    if isinstance(data, dict):
        for k, v in data.items():
            key = f"{prefix}.{k}" if prefix else str(k)
            if isinstance(v, dict) and v:
                lines.extend(_table(v, key))
            else:
                lines.append(f"{key:<24} {json.dumps(v, separators=(',', ':'))}")
    else:
        lines.append(json.dumps(data))
    return lines


def render(data, fmt):
    data = _jsonable(data)
    if fmt == "table":
        return "\n".join(_table(data))
    return json.dumps(data, separators=(",", ":"))


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        text = render(args.func(args), args.format)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"CONSISTENCY VIOLATION: {exc}", file=sys.stderr)
        return 2
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
