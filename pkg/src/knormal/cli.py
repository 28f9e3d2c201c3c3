"""``knormal`` command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 a mathematical precondition
failed, 3 an internal invariant failed (always a bug).
"""

import argparse
import json
import re
import sys
from math import gcd as igcd

from .checks import run_checks
from .cyclo_idem import gauss_periods
from .errors import InternalInvariantError, ParseError, PreconditionError
from .field_core import build_tower, format_coeff_list, parse_element
from .normality import METHODS, classify, histogram, idempotent_system, normality_via_gcd
from .ntheory import is_prime, multiplicative_order
from .poly_ring import factor_xn_minus_1

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3

CLASSIFY_METHODS = ("auto", "special") + METHODS


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_globals(parser, suppress):
    def kw(default):
        return {"default": argparse.SUPPRESS if suppress else default}

    g = parser.add_argument_group("field and output")
    g.add_argument("--field", metavar="p,m,n", help="tower F_p < F_q (q = p^m) < F_Q (Q = q^n)", **kw(None))
    g.add_argument("--modq", metavar="COEFFS", help="modulus of F_q over F_p, low degree first", **kw(None))
    g.add_argument("--modQ", metavar="COEFFS", help="modulus of F_Q over F_q, low degree first", **kw(None))
    g.add_argument("--format", choices=("json", "text"), **kw("json"))
    g.add_argument("--seed", type=int, **kw(0))


def build_parser():
    parser = _Parser(prog="knormal", description="k-normal elements of F_{q^n} over F_q")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help):
        p = sub.add_parser(name, help=help)
        _add_globals(p, suppress=True)
        return p

    command("info", "field parameters and applicable closed forms")
    command("factor", "factor x^n - 1 over F_q")
    p = command("idempotents", "primitive idempotents of F_q[x]/(x^n - 1)")
    p.add_argument("--method", choices=("crt", "matrix"), default="matrix")
    p = command("classify", "normality of one element")
    p.add_argument("--element", required=True, help='coordinates "c0,c1,..." or "g^k"')
    p.add_argument("--method", choices=CLASSIFY_METHODS, default="auto")
    p.add_argument("--check-oracle", action="store_true", help="re-check against the gcd definition")
    p = command("histogram", "count elements of F_Q by normality")
    p.add_argument("--cap", type=int, default=1 << 20, help="refuse fields with more elements")
    p.add_argument("--sample", type=int, default=32, help="elements re-checked with the gcd oracle")
    command("gauss-periods", "F_q-valued Gauss periods (n prime)")
    p = command("verify", "run the identity suites on this field")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--sample", type=int, default=64)
    return parser


def _raw_coeffs(text):
    """``"1,1,0,1"`` -> ints, ``"[1,0],[0,1]"`` -> lists of ints."""
    try:
        if "[" in text:
            return [[int(t) for t in g.split(",") if t.strip()] for g in re.findall(r"\[([^\[\]]*)\]", text)]
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise ParseError(f"cannot parse coefficients {text!r}") from exc


def tower_from_args(args):
    if args.field is None:
        raise ParseError("--field p,m,n is required")
    try:
        p, m, n = (int(t) for t in args.field.split(","))
    except ValueError as exc:
        raise ParseError(f"--field expects three integers p,m,n, got {args.field!r}") from exc
    modq = _raw_coeffs(args.modq) if args.modq else None
    modQ = _raw_coeffs(args.modQ) if args.modQ else None
    return build_tower(p, m, n, modq, modQ)


def _order_info(tower):
    n, q = tower.n, tower.q
    if igcd(n, q) != 1:
        return None
    return multiplicative_order(q, n) if n > 1 else 1


def applicable_theorems(tower):
    n, p, q = tower.n, tower.p, tower.q
    out = []
    if is_prime(n) and n != p:
        f = multiplicative_order(q, n)
        if f == n - 1:
            out.append("s2")
        elif 2 * f == n - 1:
            out.append("quadratic")
        out.append("gauss")
    if igcd(n, q) == 1:
        out.append("one_normal")
    return out


def cmd_info(tower, args):
    base = tower.base
    fac = factor_xn_minus_1(tower)
    return {
        "p": tower.p,
        "m": tower.m,
        "n": tower.n,
        "q": tower.q,
        "Q": tower.Q,
        "modulus_q": list(base.modulus) if base.m > 1 else None,
        "modulus_Q": [base.encode(c) for c in tower.modulus],
        "q_classes": fac.partition.to_json(),
        "s": fac.s,
        "degrees": list(fac.degrees),
        "multiplicity": fac.multiplicity,
        "ord_n_q": _order_info(tower),
        "d": igcd(tower.n, tower.q - 1),
        "applicable": applicable_theorems(tower),
    }


def cmd_factor(tower, args):
    fac = factor_xn_minus_1(tower)
    return {"n1": fac.n1, "multiplicity": fac.multiplicity, "factors": fac.to_json()}


def cmd_idempotents(tower, args):
    system = idempotent_system(tower, args.method)
    return system.to_json()


def cmd_classify(tower, args):
    alpha = parse_element(tower, args.element)
    report = classify(alpha, tower, args.method)
    if args.check_oracle:
        oracle = normality_via_gcd(alpha, tower)
        if (oracle.k, oracle.delta, oracle.m_alpha) != (report.k, report.delta, report.m_alpha):
            raise InternalInvariantError(
                f"{report.method} gives k = {report.k}, delta = {list(report.delta)}; "
                f"gcd oracle gives k = {oracle.k}, delta = {list(oracle.delta)}"
            )
    return report.to_dict()


def cmd_histogram(tower, args):
    return histogram(tower, cap=args.cap, oracle_sample=args.sample, seed=args.seed).to_dict()


def cmd_gauss(tower, args):
    return gauss_periods(tower).to_json(tower.base)


def cmd_verify(tower, args):
    if args.exhaustive and tower.Q > 1 << 16:
        raise PreconditionError(f"Q = {tower.Q} is too large for --exhaustive")
    checks = run_checks(tower, exhaustive=args.exhaustive, sample=args.sample, seed=args.seed)
    return {"ok": all(c.ok for c in checks), "checks": [c.to_dict() for c in checks]}


COMMANDS = {
    "info": cmd_info,
    "factor": cmd_factor,
    "idempotents": cmd_idempotents,
    "classify": cmd_classify,
    "histogram": cmd_histogram,
    "gauss-periods": cmd_gauss,
    "verify": cmd_verify,
}


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _text(command, obj, tower):
    base = tower.base
    lines = []
    if command == "info":
        for key in ("p", "m", "n", "q", "Q", "modulus_q", "modulus_Q", "s", "degrees", "multiplicity", "ord_n_q", "d"):
            lines.append(f"{key}: {obj[key]}")
        lines.append("q-classes: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in obj["q_classes"]))
        lines.append("applicable: " + (", ".join(obj["applicable"]) or "none"))
    elif command == "factor":
        for i, f in enumerate(obj["factors"], start=1):
            coeffs = format_coeff_list(base, [base.decode(c) for c in f["coeffs"]])
            lines.append(f"p_{i}: [{coeffs}] degree {f['degree']} class {f['class_representative']}")
        lines.append(f"multiplicity: {obj['multiplicity']}")
    elif command == "idempotents":
        for i, item in enumerate(obj["idempotents"], start=1):
            coeffs = format_coeff_list(base, [base.decode(c) for c in item["e_coeffs"]])
            lines.append(f"e_{i}: [{coeffs}]")
        if "det" in obj:
            lines.append(f"det M: {obj['det']}")
    elif command == "classify":
        lines.append(f"k: {obj['k']}")
        lines.append(f"delta: {obj['delta']}")
        lines.append(f"m_alpha: [{format_coeff_list(base, [base.decode(c) for c in obj['m_alpha_coeffs']])}]")
        lines.append(f"method: {obj['method']}")
    elif command == "histogram":
        for k, v in obj["counts"].items():
            lines.append(f"k = {k}: {v}")
    elif command == "verify":
        for c in obj["checks"]:
            mark = "ok  " if c["ok"] else "FAIL"
            lines.append(f"{mark} {c['name']}" + (f" ({c['detail']})" if c["detail"] and not c["ok"] else ""))
    else:
        for key in sorted(obj):
            lines.append(f"{key}: {obj[key]}")
    return "\n".join(lines)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tower = tower_from_args(args)
        obj = COMMANDS[args.command](tower, args)
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except PreconditionError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        # ParseError and any other malformed input
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(dumps(obj) if args.format == "json" else _text(args.command, obj, tower))
    if args.command == "verify" and not obj["ok"]:
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
