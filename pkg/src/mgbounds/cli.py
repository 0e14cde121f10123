"""Command-line front end.

Exit codes: 0 success or pass, 1 verification failure or probe mismatch,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bounds import IndexTooSmall, bass_bound, betti_bound, brt_rank, verify_bass, verify_betti
from .duality import ConstraintViolated, GeneratorExceedsA, alexander_dual, duality_probe
from .genex import FieldTooSmall, GenexSpec, NotUniform, generic_presentation, verify_sharpness
from .io import (degree_key, dumps, ideal_from_json, presentation_from_json,
                 presentation_to_json, table_to_json)
from .koszul import (MinimalityBroken, TooManyVariables, bass_at_prime, bass_tables,
                     betti_table, total_bass)
from .linalg import QQ, field_from_json
from .matroid import GroundSetTooLarge, circuits, flats_of_rank, members, tflats_of_level
from .module import NegativeDegrees, PresentationError, coefficient_matroid, module_rank, validate

OK, FAIL, INVALID = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(s: str) -> list[int]:
    s = s.strip()
    if not s:
        return []
    try:
        return [int(x) for x in s.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def _field(s: str):
    try:
        return field_from_json(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _read_input(args):
    if args.inline is not None:
        text = args.inline
    elif args.input is None:
        raise UsageError("no input: pass --input FILE, --input - or --inline JSON")
    elif args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"input is not valid JSON: {e}")


def _presentation(args):
    return presentation_from_json(_read_input(args), args.field)


def _emit(args, payload: dict, text: str):
    if args.json:
        print(dumps(payload))
    else:
        print(text)


def _subsets_text(subsets) -> str:
    if not subsets:
        return "(none)"
    return "\n".join("{" + ",".join(str(x) for x in members(A)) + "}" for A in subsets)


def _table_text(table, totals_label="total") -> str:
    lines = [f"{'i':>3}  {'degree':<16} mult"]
    for i in sorted(table.entries):
        for b, v in table.degrees(i).items():
            lines.append(f"{i:>3}  {'(' + degree_key(b) + ')':<16} {v}")
    lines.append(f"{totals_label}: " + " ".join(str(x) for x in table.totals()))
    return "\n".join(lines)


def _report_text(rep) -> str:
    lines = [f"{rep.kind}: values = ({', '.join(str(v) for v in rep.values)})"]
    for c in rep.size_checks:
        lines.append(f"  i={c.i}: computed {c.computed}, presentation size {c.bound}, "
                     f"{'ok' if c.equal else 'MISMATCH'}")
    for c in rep.checks:
        flag = "equal" if c.equal else ("pass" if c.passed else "FAIL")
        lines.append(f"  i={c.i}: computed {c.computed} <= bound {c.bound}  slack {c.slack}  {flag}")
    lines.append("PASS" if rep.passed else "FAIL")
    return "\n".join(lines)


def cmd_validate(args):
    P = _presentation(args)
    bad = validate(P)
    payload = {"valid": not bad, "violations": [v.to_json() for v in bad]}
    for v in bad:
        print(str(v), file=sys.stderr)
    _emit(args, payload, "valid" if not bad else "invalid")
    return OK if not bad else INVALID


def cmd_matroid(args):
    P = _presentation(args)
    M = coefficient_matroid(P)
    if args.what == "circuits":
        subsets = circuits(M)
    elif args.what == "flats":
        if args.rank is None:
            raise UsageError("matroid flats needs --rank")
        subsets = flats_of_rank(M, args.rank)
    else:
        if args.level is None:
            raise UsageError("matroid tflats needs --level")
        subsets = tflats_of_level(M, args.level)
    payload = {"n": M.n, "r": M.r, "kind": args.what, "subsets": [list(members(A)) for A in subsets]}
    _emit(args, payload, f"n={M.n} r={M.r}\n" + _subsets_text(subsets))
    return OK


def cmd_bound(args):
    if args.bass:
        if args.mu0 is None or args.mu1 is None:
            mu = total_bass(_presentation(args))
            mu0, mu1 = mu[0], mu[1]
        else:
            mu0, mu1 = args.mu0, args.mu1
        value = bass_bound(mu0, mu1, args.i, args.d)
        payload = {"bound": value, "mu0": mu0, "mu1": mu1, "i": args.i, "d": args.d}
        _emit(args, payload, f"bass bound at i={args.i}, d={args.d}: {value}")
        return OK
    if args.beta0 is None or args.beta1 is None:
        P = _presentation(args)
        b0, b1, rk = P.beta0, P.beta1, module_rank(P)
    else:
        b0, b1, rk = args.beta0, args.beta1, args.rank or 0
    value = betti_bound(b0, b1, rk, args.i)
    payload = {"bound": value, "beta0": b0, "beta1": b1, "rank": rk, "i": args.i}
    _emit(args, payload, f"betti bound at i={args.i}: {value}")
    return OK


def cmd_brt(args):
    lam = args.n - args.r + 1
    idx = [args.i] if args.i is not None else list(range(2, lam + 1))
    ranks = {i: brt_rank(args.n, args.r, i) for i in idx}
    payload = {"n": args.n, "r": args.r, "lambda": lam, "ranks": {str(i): v for i, v in ranks.items()}}
    _emit(args, payload, "\n".join(f"i={i}: {v}" for i, v in ranks.items()))
    return OK


def cmd_betti(args):
    P = _presentation(args)
    table = betti_table(P, jobs=args.jobs)
    _emit(args, {"betti": table_to_json(table, P.nvars)}, _table_text(table))
    return OK


def cmd_bass(args):
    P = _presentation(args)
    if args.prime is not None:
        table = bass_at_prime(P, args.prime, jobs=args.jobs)
        _emit(args, {"bass": table_to_json(table, P.nvars)},
              f"prime ({','.join(str(j) for j in args.prime)})\n" + _table_text(table))
        return OK
    positive = args.primes == "positive"
    every = bass_tables(P, jobs=args.jobs)
    width = P.nvars + 1
    tot_all = [sum(t.total(i) for t in every) for i in range(width)]
    tot_pos = [sum(t.total(i) for t in every if t.prime) for i in range(width)]
    tables = [t for t in every if t.prime or not positive]
    payload = {"primes": [table_to_json(t, P.nvars) for t in tables],
               "totals": tot_pos if positive else tot_all,
               "totals_all": tot_all, "totals_positive": tot_pos}
    parts = []
    for t in tables:
        if t.entries:
            parts.append(f"prime ({','.join(str(j) for j in members(t.prime))})\n" + _table_text(t))
    parts.append("total (all primes): " + " ".join(map(str, tot_all)))
    parts.append("total (positive primes): " + " ".join(map(str, tot_pos)))
    _emit(args, payload, "\n".join(parts))
    return OK


def cmd_verify_betti(args):
    rep = verify_betti(_presentation(args), jobs=args.jobs)
    _emit(args, {"report": rep.to_json()}, _report_text(rep))
    return OK if rep.passed else FAIL


def cmd_verify_bass(args):
    rep = verify_bass(_presentation(args), positive=args.primes == "positive", jobs=args.jobs)
    _emit(args, {"report": rep.to_json()}, _report_text(rep))
    return OK if rep.passed else FAIL


def cmd_genex(args):
    spec = GenexSpec(args.rank, args.cols, args.field or QQ, args.spike)
    P = generic_presentation(spec, seed=args.seed)
    payload = {"presentation": presentation_to_json(P)}
    text = json.dumps(presentation_to_json(P), sort_keys=True)
    status = OK
    if args.check:
        try:
            rep = verify_sharpness(P, jobs=args.jobs)
        except NotUniform as e:
            print(f"NotUniform: {e}", file=sys.stderr)
            return FAIL
        payload["report"] = rep.to_json()
        text += "\n" + _report_text(rep)
        status = OK if rep.passed else FAIL
    _emit(args, payload, text)
    return status


def cmd_dual(args):
    I = ideal_from_json(_read_input(args))
    D = alexander_dual(I, args.a)
    payload = {"ideal": I.to_json(), "a": args.a, "dual": D.to_json()}
    gens = " ".join("(" + degree_key(g) + ")" for g in D.gens) or "(zero ideal)"
    _emit(args, payload, f"dual generators: {gens}")
    return OK


def cmd_probe(args):
    P = _presentation(args)
    with open(args.candidate) as fh:
        Q = presentation_from_json(json.load(fh), args.field)
    rep = duality_probe(P, Q, args.a)
    lines = [f"compared {rep.compared}, matched {rep.matches}"]
    for x in rep.mismatches:
        lines.append(f"  mismatch i={x.i} b={x.b} betti={x.betti} "
                     f"bass_degree={x.bass_degree} prime={list(members(x.prime))} bass={x.bass}")
    lines.append(f"totals: betti {rep.betti_totals} vs bass {rep.bass_totals}")
    lines.append("PASS" if rep.passed else "FAIL")
    _emit(args, {"probe": rep.to_json()}, "\n".join(lines))
    return OK if rep.passed else FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="JSON file, or - for standard input")
    common.add_argument("--inline", help="JSON document given inline")
    common.add_argument("--field", type=_field, default=None, help='"q" or a prime p (overrides the input)')
    common.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: $MGBOUNDS_JOBS or 1)")
    common.add_argument("--seed", type=int, default=None)

    p = argparse.ArgumentParser(prog="mgbounds", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"mgbounds {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common]).set_defaults(func=cmd_validate)

    s = sub.add_parser("matroid", parents=[common])
    s.add_argument("what", choices=["circuits", "flats", "tflats"])
    s.add_argument("--rank", type=int)
    s.add_argument("--level", type=int)
    s.set_defaults(func=cmd_matroid)

    s = sub.add_parser("bound", parents=[common])
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--bass", action="store_true")
    s.add_argument("--d", type=int, default=0)
    s.add_argument("--beta0", type=int)
    s.add_argument("--beta1", type=int)
    s.add_argument("--rank", type=int)
    s.add_argument("--mu0", type=int)
    s.add_argument("--mu1", type=int)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("brt", parents=[common])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--i", type=int)
    s.set_defaults(func=cmd_brt)

    sub.add_parser("betti", parents=[common]).set_defaults(func=cmd_betti)

    s = sub.add_parser("bass", parents=[common])
    s.add_argument("--prime", type=_int_list, help="zero-based variable indices, e.g. 0,2")
    s.add_argument("--primes", choices=["all", "positive"], default="all")
    s.set_defaults(func=cmd_bass)

    sub.add_parser("verify-betti", parents=[common]).set_defaults(func=cmd_verify_betti)

    s = sub.add_parser("verify-bass", parents=[common])
    s.add_argument("--primes", choices=["all", "positive"], default="all")
    s.set_defaults(func=cmd_verify_bass)

    s = sub.add_parser("genex", parents=[common])
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--cols", type=int, required=True)
    s.add_argument("--spike", type=int, default=1)
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_genex)

    s = sub.add_parser("dual", parents=[common])
    s.add_argument("--a", type=_int_list, required=True)
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("probe-duality", parents=[common])
    s.add_argument("--candidate", required=True)
    s.add_argument("--a", type=_int_list, required=True)
    s.set_defaults(func=cmd_probe)
    return p


INPUT_ERRORS = (UsageError, PresentationError, MinimalityBroken, NegativeDegrees, IndexTooSmall,
                ConstraintViolated, GeneratorExceedsA, FieldTooSmall, GroundSetTooLarge,
                TooManyVariables, OSError, KeyError, ValueError, TypeError)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as e:
        name = type(e).__name__
        print(f"error: {name}: {e}", file=sys.stderr)
        return INVALID


def entry():
    sys.exit(main())
