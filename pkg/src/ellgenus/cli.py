"""ellgenus command line.

Exit codes: 0 success (a NON-RIGID finding is a success), 1 mathematical
rejection, 2 malformed usage or input.
"""
import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from . import constructions, equivariant, genus, wire
from .formatting import format_ratfunc, format_value

log = logging.getLogger("ellgenus")

USAGE_ERROR = 2
MATH_ERROR = 1


class UsageError(Exception):
    pass


def default_q_order() -> int:
    raw = os.environ.get("GENUS_Q_ORDER_DEFAULT", "4")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError("GENUS_Q_ORDER_DEFAULT must be an integer, got %r" % raw) from None
    if value < 1:
        raise UsageError("GENUS_Q_ORDER_DEFAULT must be >= 1")
    return value


def parse_spec(text: str) -> genus.GenusSpec:
    name, _, arg = text.partition(":")
    if name == "signature" and not arg:
        return genus.SIGNATURE
    if name == "ahat" and not arg:
        return genus.AHAT
    if name == "elliptic":
        try:
            q_order = int(arg) if arg else default_q_order()
        except ValueError:
            raise UsageError("bad q-order in %r" % text) from None
        if q_order < 1:
            raise UsageError("q-order must be >= 1")
        log.debug("building the universal elliptic genus to O(q^%d)", q_order)
        return genus.universal_elliptic_spec(q_order)
    if name == "custom":
        parts = arg.split(",")
        if len(parts) != 2:
            raise UsageError("custom spec is custom:DELTA,EPS")
        try:
            return genus.GenusSpec(Fraction(parts[0]), Fraction(parts[1]))
        except (ValueError, ZeroDivisionError):
            raise UsageError("bad rational in %r" % text) from None
    raise UsageError("unknown genus %r (signature, ahat, elliptic:N, custom:D,E)" % text)


def _ints(text):
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise UsageError("expected comma-separated integers, got %r" % text) from None


def _load_data(path):
    return wire.data_from_json(wire.load_json(path))


def _emit_data(d):
    print(json.dumps(wire.data_to_json(d)))


# -- genus ---------------------------------------------------------------------

def cmd_genus_eval(args):
    spec = parse_spec(args.spec)
    data = wire.pontryagin_from_json(wire.load_json(args.pontryagin))
    print(format_value(genus.evaluate_genus(data, spec)))
    return 0


def cmd_genus_log(args):
    spec = parse_spec(args.spec)
    values = genus.cp_coefficients(spec, args.max_i)
    print(", ".join(format_value(v) for v in values))
    return 0


def cmd_genus_check(args):
    spec = parse_spec(args.spec)
    report = genus.ellipticity_check(spec, args.max_i)
    print(report)
    return 0 if report.passed else MATH_ERROR


# -- equivariant characters ---------------------------------------------------

def cmd_equiv_char(args):
    data = _load_data(args.data)
    q_order = args.q_order if args.q_order is not None else default_q_order()
    if args.type != "elliptic":
        q_order = 1
    ch = equivariant.character(data, args.type, q_order)
    report = equivariant.polynomiality_check(ch)
    ch = report.character
    bad = dict(report.failures)
    for n, f in enumerate(ch.per_q):
        prefix = "q^%d: " % n if args.type == "elliptic" else ""
        if ch.polynomial_form is not None:
            print(prefix + str(ch.polynomial_form[n]))
        else:
            print(prefix + format_ratfunc(f))
            if n in bad:
                print("%sNotPolynomial: %s" % (" " * len(prefix), bad[n]))
    status = 0
    if args.eval_at_one:
        try:
            value = equivariant.evaluate_at_one(ch)
            print("value at 1: %s" % format_value(value))
        except ZeroDivisionError as exc:
            print("value at 1: undefined (%s)" % exc)
            status = MATH_ERROR
    if args.check_rigidity:
        print(equivariant.rigidity_check(ch))
    return status


# -- constructions ------------------------------------------------------------

def _indexed(spec):
    path, sep, idx = spec.rpartition(":")
    if not sep:
        raise UsageError("expected FILE:INDEX, got %r" % spec)
    try:
        return path, int(idx)
    except ValueError:
        raise UsageError("bad index in %r" % spec) from None


def cmd_construct(args):
    what = args.what
    if what == "cpn":
        _emit_data(constructions.linear_cpn(_ints(args.weights)))
    elif what == "sphere":
        try:
            _emit_data(constructions.sphere_of_representation(_ints(args.weights)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif what == "product":
        _emit_data(constructions.product(_load_data(args.a), _load_data(args.b)))
    elif what == "reverse":
        _emit_data(constructions.orientation_reverse(_load_data(args.a)))
    elif what == "connect-sum":
        (pa, i), (pb, j) = _indexed(args.a), _indexed(args.b)
        _emit_data(constructions.equivariant_connected_sum(_load_data(pa), i, _load_data(pb), j))
    elif what == "check-chern":
        print(constructions.chern_weight_relation(args.k, args.mn, args.ms))
    return 0


# -- parser -------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="ellgenus", description="Exact genera and equivariant genus characters.")
    parser.add_argument("-v", "--verbose", action="store_true")
    top = parser.add_subparsers(dest="command", required=True)

    g = top.add_parser("genus", help="genera from Pontryagin numbers")
    gsub = g.add_subparsers(dest="action", required=True)
    p = gsub.add_parser("eval", help="evaluate a genus on Pontryagin data")
    p.add_argument("--spec", required=True)
    p.add_argument("--pontryagin", required=True, help="JSON file or - for stdin")
    p.set_defaults(func=cmd_genus_eval)
    p = gsub.add_parser("log", help="values on CP^0, CP^2, ..., CP^{2N}")
    p.add_argument("--spec", required=True)
    p.add_argument("--max-i", type=int, required=True)
    p.set_defaults(func=cmd_genus_log)
    p = gsub.add_parser("check", help="ellipticity check up to CP^{2N}")
    p.add_argument("--spec", required=True)
    p.add_argument("--max-i", type=int, default=3)
    p.set_defaults(func=cmd_genus_check)

    e = top.add_parser("equiv", help="equivariant characters from fixed point data")
    esub = e.add_subparsers(dest="action", required=True)
    p = esub.add_parser("char")
    p.add_argument("--type", choices=["signature", "ahat", "elliptic"], required=True)
    p.add_argument("--q-order", type=int, default=None)
    p.add_argument("--data", required=True, help="JSON file or - for stdin")
    p.add_argument("--check-rigidity", action="store_true")
    p.add_argument("--eval-at-one", action="store_true")
    p.set_defaults(func=cmd_equiv_char)

    c = top.add_parser("construct", help="fixed point data of standard actions")
    csub = c.add_subparsers(dest="what", required=True)
    for name in ("cpn", "sphere"):
        p = csub.add_parser(name)
        p.add_argument("--weights", required=True)
    p = csub.add_parser("product")
    p.add_argument("a")
    p.add_argument("b")
    p = csub.add_parser("reverse")
    p.add_argument("a")
    p = csub.add_parser("connect-sum")
    p.add_argument("a", metavar="A.json:IDX")
    p.add_argument("b", metavar="B.json:IDX")
    p = csub.add_parser("check-chern")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mn", type=int, required=True)
    p.add_argument("--ms", type=int, required=True)
    c.set_defaults(func=cmd_construct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, wire.MalformedInput) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    except constructions.NonIsolatedFixedSet as exc:
        print(str(exc))
        return MATH_ERROR
    except constructions.GluingMismatch as exc:
        print("gluing mismatch: %s" % exc)
        return MATH_ERROR
    except genus.ConsistencyError as exc:
        print("inconsistent: %s" % exc)
        return MATH_ERROR
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
