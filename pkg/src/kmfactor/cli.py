"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 the algorithm could
not reach an answer, 4 an internal invariant failed.
"""
from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path

from . import series as ser
from .cartan import classify, deg_lambda, dominant_weight, dynkin_graph, is_indecomposable, parse_gcm
from .cgraph import c_dc, c_direct, k_partition_counts, parse_graph
from .errors import AlgorithmFailure, InputError, InternalInvariantError, InvalidWeight
from .factor import character, factorize_numerators, numerator_product, sort_weights, verify_prop1
from .weyl import mult_sum_simple_roots, numerator, verify_loglem


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _gcm(path: str):
    return parse_gcm(_read(path))


def _parse_weight(text: str, rank: int):
    try:
        coords = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InvalidWeight(f"cannot parse weight {text!r}") from None
    return dominant_weight(coords, rank)


def _parse_weights(text: str, rank: int):
    text = text.strip()
    if not text:
        return []
    return [_parse_weight(part.strip(), rank) for part in text.split(";")]


def _fmt_weight(w) -> str:
    return "(" + ",".join(map(str, w)) + ")"


def _fmt_multiset(weights) -> list[str]:
    counts = Counter(weights)
    return [f"{_fmt_weight(w)} x{counts[w]}" for w in sort_weights(counts)]


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _cmd_info(args):
    A = _gcm(args.gcm)
    G = dynkin_graph(A)
    kind = classify(A) if is_indecomposable(A) else "decomposable"
    lines = [
        f"rank: {A.rank}",
        "labels: " + " ".join(A.labels),
        "symmetrizer: " + " ".join(str(d) for d in A.symmetrizer),
        "edges: " + " ".join(f"{i}-{j}" for i, j in G.sorted_edges()),
        "connected: " + ("yes" if G.is_connected() else "no"),
        f"type: {kind}",
    ]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _load_graph_arg(path: str):
    text = _read(path)
    if text.lstrip().startswith("{"):
        return dynkin_graph(parse_gcm(text))
    return parse_graph(text)


def _cmd_cvalue(args):
    G = _load_graph_arg(args.input)
    lines = []
    values = {}
    if args.method in ("direct", "both"):
        values["direct"] = c_direct(G)
        lines.append(f"c = {values['direct']} (direct)")
    if args.method in ("dc", "both"):
        values["dc"] = c_dc(G)
        lines.append(f"c = {values['dc']} (deletion-contraction)")
    if args.table:
        for k, ck in k_partition_counts(G).items():
            lines.append(f"c_{k} = {ck}")
    _emit("\n".join(lines) + "\n", args.output)
    if len(set(values.values())) > 1:
        print("error: methods disagree", file=sys.stderr)
        return 4
    return 0


def _cmd_numerator(args, make):
    A = _gcm(args.gcm)
    lam = _parse_weight(args.weight, A.rank)
    _emit(ser.dumps(make(A, lam, args.degree)), args.output)
    return 0


def _cmd_multiplicity(args):
    A = _gcm(args.gcm)
    mult = mult_sum_simple_roots(A)
    c = c_dc(dynkin_graph(A))
    _emit(f"mult = {mult} (-log U_0)\nc = {c} (deletion-contraction)\n", args.output)
    if mult != c:
        print("error: multiplicity and c(G) disagree", file=sys.stderr)
        return 4
    return 0


def _cmd_factor(args):
    A = _gcm(args.gcm)
    P = ser.loads(_read(args.series))
    found = factorize_numerators(A, P, args.degree)
    _emit("".join(line + "\n" for line in _fmt_multiset(found)), args.output)
    return 0


def _cmd_factor_weights(args):
    A = _gcm(args.gcm)
    weights = _parse_weights(args.weights, A.rank)
    D = args.degree if args.degree is not None else sum(deg_lambda(w) for w in weights)
    P = numerator_product(A, weights, D)
    found = factorize_numerators(A, P, D)
    _emit("".join(line + "\n" for line in _fmt_multiset(found)), args.output)
    if found != sort_weights(weights):
        print("error: recovered factors differ from the input", file=sys.stderr)
        return 4
    return 0


def _cmd_verify(args):
    A = _gcm(args.gcm)
    lam = _parse_weight(args.weight, A.rank)
    lines = []
    bad = verify_loglem(A, lam, args.degree)
    lines.append(f"loglem: {'ok' if not bad else f'{len(bad)} violation(s)'}")
    lines += [f"  {_fmt_weight(v.offset)} ({v.clause}): {v.message}" for v in bad]
    ok = not bad
    if args.degree >= deg_lambda(lam):
        coef, problems = verify_prop1(A, lam, args.degree)
        target = _fmt_weight(tuple(m + 1 for m in lam))
        lines.append(f"prop1: coefficient {coef} at {target}, "
                     + ("ok" if not problems else f"{len(problems)} violation(s)"))
        lines += [f"  {p}" for p in problems]
        ok = ok and not problems
    else:
        lines.append(f"prop1: skipped (degree {args.degree} < deg(lambda) = {deg_lambda(lam)})")
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 4


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kmfactor", description="Weyl-Kac numerators, c(G) and unique factorization.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        return sp

    sp = cmd("info", _cmd_info, "rank, symmetrizer, graph and type of a GCM")
    sp.add_argument("gcm")

    sp = cmd("cvalue", _cmd_cvalue, "the graph invariant c(G)")
    sp.add_argument("input", help="GCM JSON file or graph text file")
    sp.add_argument("--method", choices=["direct", "dc", "both"], default="both")
    sp.add_argument("--table", action="store_true", help="also print c_k for every k")

    for name, make in (("numerator", numerator), ("character", character)):
        sp = cmd(name, lambda a, make=make: _cmd_numerator(a, make), f"truncated {name} series")
        sp.add_argument("gcm")
        sp.add_argument("--weight", required=True, help="m1,...,ml")
        sp.add_argument("--degree", type=int, required=True)

    sp = cmd("multiplicity", _cmd_multiplicity, "multiplicity of the sum of simple roots")
    sp.add_argument("gcm")

    sp = cmd("factor", _cmd_factor, "factor a series file into Weyl numerators")
    sp.add_argument("gcm")
    sp.add_argument("--series", required=True)
    sp.add_argument("--degree", type=int)

    sp = cmd("factor-weights", _cmd_factor_weights, "round trip: multiply, then factor")
    sp.add_argument("gcm")
    sp.add_argument("--weights", required=True, help='"m1,..;m1,..;..."')
    sp.add_argument("--degree", type=int)

    sp = cmd("verify", _cmd_verify, "check the offset lemma and the leading log term")
    sp.add_argument("gcm")
    sp.add_argument("--weight", required=True)
    sp.add_argument("--degree", type=int, required=True)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "degree", None) is not None and args.degree < 0:
            raise UsageError("--degree must be non-negative")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AlgorithmFailure as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 4


def main():
    sys.exit(run())
