"""Command line front end.

Commands compose through pipes: anything that prints a sequence can feed a
command that reads one (``--seq`` omitted or ``-`` means standard input)::

    momentseq transform minor --seq @catalan:20 --r 1,2 --t 1,2 \\
        | momentseq verify stieltjes --depth 3

Exit status: 0 on success or a passing verdict, 1 on a failing verdict or a
counterexample, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import hankel, poly, positivity, seq, transform
from .exact import fmt, to_decimal, to_fraction
from .interval import QuadraticInterval, map_interval


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# input helpers


def _read_stdin() -> str:
    data = sys.stdin.read()
    if not data.strip():
        raise InputError("expected a sequence on standard input")
    return data


def load_seq(spec: Optional[str]) -> seq.SequencePrefix:
    if spec is None or spec == "-":
        text = _read_stdin()
        return seq.from_json(json.loads(text)) if text.lstrip().startswith("{") else seq.parse_plain(text)
    if spec.startswith("@"):
        name, sep, length = spec[1:].rpartition(":")
        if not sep or not name:
            raise InputError(f"catalog shorthand must look like @name:len, got {spec!r}")
        return seq.catalog(name, int(length))
    if os.path.exists(spec):
        return seq.read_sequence(spec)
    return seq.SequencePrefix(tuple(to_fraction(v) for v in spec.split(",")))


def load_poly(spec: str, num_vars: Optional[int]) -> poly.MultiPoly:
    text = spec
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
    if text.lstrip().startswith("{"):
        return poly.from_json(json.loads(text))
    return poly.parse_poly(text.strip(), num_vars)


def parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(","))


def parse_matrix(text: str) -> list[list[Fraction]]:
    return [[to_fraction(v) for v in row.split(",")] for row in text.split(";")]


def parse_interval(text: str) -> QuadraticInterval:
    parts = text.split(",")
    if len(parts) != 3:
        raise InputError(f"--interval takes c,v,w, got {text!r}")
    return QuadraticInterval(to_fraction(parts[0]), to_fraction(parts[1]), int(parts[2]))


def parse_domain(text: str, dim: int) -> positivity.DomainSpec:
    if text == "orthant":
        return positivity.DomainSpec.orthant(dim)
    if text in ("reals", "all_reals"):
        return positivity.DomainSpec.all_reals(dim)
    if text.startswith("box:"):
        lo, hi = text[4:].split(",")
        return positivity.DomainSpec.box(to_fraction(lo), to_fraction(hi), dim)
    raise InputError(f"--domain must be orthant, reals or box:lo,hi, got {text!r}")


# ---------------------------------------------------------------------------
# output helpers


def _seq_out(s: seq.SequencePrefix, args) -> dict:
    obj = seq.to_json(s)
    if args.decimal:
        obj["values_decimal"] = [to_decimal(v, args.decimal) for v in s.values]
    return obj


def _seq_plain(s: seq.SequencePrefix) -> str:
    body = ", ".join(fmt(v) for v in s.values)
    return f"{s.label}: {body}" if s.label else body


def _emit(args, obj, plain: str) -> None:
    if args.plain:
        print(plain)
    else:
        print(json.dumps(obj, indent=2))


def _report(args, rep: hankel.CheckReport) -> int:
    obj = rep.to_json()
    if args.decimal and rep.witness:
        obj["witness"]["value_decimal"] = to_decimal(rep.witness.value, args.decimal)
    if rep.passed:
        plain = f"pass {rep.criterion} depth {rep.depth_checked}"
    else:
        w = rep.witness
        plain = f"fail {rep.criterion} at m={w.m}: {w.detail}, value {fmt(w.value)}"
    _emit(args, obj, plain)
    return 0 if rep.passed else 1


def _verdict(args, v: positivity.PositivityVerdict) -> int:
    obj = v.to_json()
    if args.decimal and v.value is not None:
        obj["value_decimal"] = to_decimal(v.value, args.decimal)
        obj["point_decimal"] = [to_decimal(x, args.decimal) for x in v.point] if v.point else None
    if v.found_counterexample:
        pt = ", ".join(fmt(x) for x in v.point)
        plain = f"counterexample at ({pt}): value {fmt(v.value)}"
    elif v.exact:
        plain = "nonnegative (exact)"
    else:
        plain = f"no counterexample in {v.samples} samples (min sampled {fmt(v.value)}); evidence only"
    _emit(args, obj, plain)
    return 1 if v.found_counterexample else 0


# ---------------------------------------------------------------------------
# commands


def cmd_seq_gen(args) -> int:
    s = seq.catalog(args.name, args.len, args.param)
    _emit(args, _seq_out(s, args), _seq_plain(s))
    return 0


def cmd_seq_read(args) -> int:
    s = load_seq(args.path)
    _emit(args, _seq_out(s, args), _seq_plain(s))
    return 0


def cmd_poly_parse(args) -> int:
    p = load_poly(args.poly, args.vars)
    _emit(args, poly.to_json(p), poly.to_text(p))
    return 0


def cmd_poly_print(args) -> int:
    print(poly.to_text(load_poly(args.poly, args.vars)))
    return 0


def cmd_poly_symmetrize(args) -> int:
    p = poly.symmetrize(load_poly(args.poly, args.vars))
    _emit(args, poly.to_json(p), poly.to_text(p))
    return 0


def _transformed(args, s: seq.SequencePrefix) -> int:
    _emit(args, _seq_out(s, args), _seq_plain(s))
    return 0


def cmd_transform_apply(args) -> int:
    p = load_poly(args.poly, args.vars)
    return _transformed(args, transform.apply_tp(p, load_seq(args.seq)))


def cmd_transform_minor(args) -> int:
    spec = transform.MinorSpec(parse_ints(args.r), parse_ints(args.t))
    return _transformed(args, transform.minor_sequence(load_seq(args.seq), spec))


def cmd_transform_coposform(args) -> int:
    A = parse_matrix(args.matrix)
    return _transformed(args, transform.copositive_form_sequence(A, load_seq(args.seq)))


def cmd_transform_witness(args) -> int:
    p = load_poly(args.poly, 1)
    w = transform.dirac_witness(p, to_fraction(args.xi), args.len)
    obj = {
        "xi": fmt(w.xi),
        "value": fmt(w.value),
        "certifies_failure": w.certifies_failure,
        "prefix": seq.to_json(w.prefix),
        "transformed": seq.to_json(w.transformed),
    }
    if w.certifies_failure:
        plain = f"p({fmt(w.xi)}) = {fmt(w.value)} < 0: T_p lacks the Stieltjes moment property"
    else:
        plain = f"p({fmt(w.xi)}) = {fmt(w.value)} >= 0: no certificate"
    _emit(args, obj, plain)
    return 1 if w.certifies_failure else 0


def cmd_verify(args) -> int:
    s = load_seq(args.seq)
    kind = args.criterion
    if kind == "hamburger":
        rep = hankel.check_hamburger(s, args.depth)
    elif kind == "stieltjes":
        rep = hankel.check_stieltjes(s, args.depth)
    elif kind == "totalnn":
        rep = hankel.check_total_nonneg(s, args.depth, args.budget or hankel.DEFAULT_MINOR_BUDGET)
    else:
        if args.interval is None:
            raise InputError("verify interval needs --interval c,v,w")
        rep = hankel.check_interval(s, parse_interval(args.interval), args.depth)
    return _report(args, rep)


def cmd_positivity_check(args) -> int:
    p = load_poly(args.poly, args.vars)
    dom = parse_domain(args.domain, p.num_vars)
    v = positivity.check_nonneg(p, dom, args.budget or positivity.DEFAULT_BUDGET, args.resolution)
    return _verdict(args, v)


def cmd_positivity_comparemin(args) -> int:
    p = load_poly(args.poly, args.vars)
    dom = parse_domain(args.domain, p.num_vars)
    cmp = positivity.compare_min(p, dom, args.resolution, args.budget or positivity.DEFAULT_BUDGET)
    plain = (
        f"min p = {fmt(cmp.min_p)} at ({', '.join(fmt(x) for x in cmp.point_p)}); "
        f"min p-bar = {fmt(cmp.min_pbar)} at ({', '.join(fmt(x) for x in cmp.point_pbar)})"
    )
    _emit(args, cmp.to_json(), plain)
    return 0


def cmd_positivity_copositive(args) -> int:
    A = parse_matrix(args.matrix)
    v = positivity.copositive_check(A, args.budget or positivity.DEFAULT_BUDGET, args.resolution)
    return _verdict(args, v)


def cmd_interval_map(args) -> int:
    image = map_interval(parse_interval(args.interval), args.d)
    obj = image.to_json()
    if args.decimal:
        obj["decimal"] = [image.lo.to_decimal(args.decimal), image.hi.to_decimal(args.decimal)]
    _emit(args, obj, str(image))
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--plain", action="store_true", help="human-readable text instead of JSON")
    common.add_argument("--decimal", type=int, default=0, metavar="K",
                        help="add approximate K-digit decimal renderings")
    common.add_argument("--threads", type=int, default=1, metavar="N",
                        help="accepted for compatibility; output never depends on it")
    common.add_argument("--budget", type=int, default=None, metavar="N")

    parser = argparse.ArgumentParser(prog="momentseq", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(group, name, func, help_text):
        p = group.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    g = groups.add_parser("seq", help="generate or read sequences").add_subparsers(dest="cmd", required=True)
    p = leaf(g, "gen", cmd_seq_gen, "catalog sequence")
    p.add_argument("--name", required=True)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--param", default=None, help="ratio / point for geometric and dirac")
    p = leaf(g, "read", cmd_seq_read, "read a sequence file")
    p.add_argument("path", nargs="?", default=None)

    g = groups.add_parser("poly", help="polynomial utilities").add_subparsers(dest="cmd", required=True)
    for name, func in (("parse", cmd_poly_parse), ("print", cmd_poly_print), ("symmetrize", cmd_poly_symmetrize)):
        p = leaf(g, name, func, f"{name} a polynomial")
        p.add_argument("--poly", required=True)
        p.add_argument("--vars", type=int, default=None)

    g = groups.add_parser("transform", help="build new sequences").add_subparsers(dest="cmd", required=True)
    p = leaf(g, "apply", cmd_transform_apply, "T_p(alpha)")
    p.add_argument("--poly", required=True)
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--seq", default=None)
    p = leaf(g, "minor", cmd_transform_minor, "Hankel minor sequence")
    p.add_argument("--seq", default=None)
    p.add_argument("--r", required=True)
    p.add_argument("--t", required=True)
    p = leaf(g, "coposform", cmd_transform_coposform, "quadratic-form sequence")
    p.add_argument("--matrix", required=True, help="rows separated by ';', entries by ','")
    p.add_argument("--seq", default=None)
    p = leaf(g, "witness", cmd_transform_witness, "point-mass negativity witness")
    p.add_argument("--poly", required=True)
    p.add_argument("--xi", required=True)
    p.add_argument("--len", type=int, required=True)

    g = groups.add_parser("verify", help="moment criteria").add_subparsers(dest="cmd", required=True)
    for name in ("hamburger", "stieltjes", "totalnn", "interval"):
        p = leaf(g, name, cmd_verify, f"{name} criterion")
        p.set_defaults(criterion=name)
        p.add_argument("--seq", default=None)
        p.add_argument("--depth", type=int, default=None)
        if name == "interval":
            p.add_argument("--interval", default=None, metavar="c,v,w")

    g = groups.add_parser("positivity", help="polynomial nonnegativity").add_subparsers(dest="cmd", required=True)
    p = leaf(g, "check", cmd_positivity_check, "search for a counterexample")
    p.add_argument("--poly", required=True)
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--domain", default="orthant")
    p.add_argument("--resolution", type=int, default=positivity.DEFAULT_RESOLUTION)
    p = leaf(g, "comparemin", cmd_positivity_comparemin, "grid minima of p and p-bar")
    p.add_argument("--poly", required=True)
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--domain", required=True, help="box:lo,hi")
    p.add_argument("--resolution", type=int, default=positivity.DEFAULT_RESOLUTION)
    p = leaf(g, "copositive", cmd_positivity_copositive, "copositivity of a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--resolution", type=int, default=positivity.DEFAULT_RESOLUTION)

    g = groups.add_parser("interval", help="support intervals").add_subparsers(dest="cmd", required=True)
    p = leaf(g, "map", cmd_interval_map, "image interval under a d-variable T_p")
    p.add_argument("--interval", required=True, metavar="c,v,w")
    p.add_argument("--d", type=int, required=True)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
