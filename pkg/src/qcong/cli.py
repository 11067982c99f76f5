"""Command-line interface.

Exit codes: 0 when everything checked holds, 1 when a counterexample or
failing identity was found, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional, Sequence

from qcong import congruence as C
from qcong import identities as I
from qcong import oracle as O
from qcong import series as S
from qcong.errors import QSeriesError, UnknownIdentity
from qcong.expr import expand

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def series_to_json(s: S.TruncatedSeries) -> list[int]:
    """Coefficients ``c_0 .. c_{N-1}`` as a JSON array (ints are unbounded)."""
    return list(s.coeffs)


def series_from_json(data: list) -> S.TruncatedSeries:
    if not isinstance(data, list) or not data:
        raise QSeriesError("expected a non-empty coefficient array")
    return S.from_coeffs(int(c) for c in data)


def _default_order() -> int:
    env = os.environ.get("QCONG_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            raise QSeriesError(f"QCONG_ORDER must be an integer, got {env!r}") from None
    return C.DEFAULT_ORDER


def _pair(text: str) -> tuple[int, int]:
    try:
        ell, mu = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected L,M, got {text!r}")
    return ell, mu


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(args, text_lines, json_obj=None, json_lines=None):
    if args.format == "json":
        if json_lines is not None:
            for obj in json_lines:
                print(json.dumps(obj, sort_keys=True))
        else:
            print(json.dumps(json_obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_expand(args) -> int:
    s = expand(args.expr, args.order)
    _emit(args, [f"{n} {c}" for n, c in enumerate(s.coeffs)], series_to_json(s))
    return EXIT_OK


def cmd_identities(args) -> int:
    if args.action == "export":
        print(I.export_json())
        return EXIT_OK
    if args.ids:
        reports = [I.check_identity(i, args.order) for i in args.ids]
    else:
        reports = I.check_all(args.order, args.parallelism)
    if args.dissections:
        reports += [I.check_dissection(r, args.order) for r in I.list_identities()
                    if r.dissection_base and (not args.ids or r.id in args.ids)]
    failures = [r for r in reports if not r.holds]
    lines = []
    for r in reports:
        tag = "dissection " if r.kind == "dissection" else ""
        if r.component is not None:
            tag += f"component {r.component} "
        if r.holds:
            lines.append(f"ok    {r.id} {tag}(N={r.order})")
        else:
            lines.append(f"FAIL  {r.id} {tag}at q^{r.first_bad_exponent}: "
                         f"lhs {r.lhs_coeff} vs rhs {r.rhs_coeff} {r.instance or ''}".rstrip())
    lines.append(f"{len(reports) - len(failures)}/{len(reports)} hold, {len(failures)} failures")
    _emit(args, lines, json_lines=[r.to_dict() for r in reports])
    return EXIT_FAIL if failures else EXIT_OK


def cmd_verify(args) -> int:
    if args.claims:
        with open(args.claims) as fh:
            claims = C.load_claims(fh.read())
    else:
        claims = list(C.claim_catalog())
    reports = C.verify_claims(claims, args.order, args.parallelism)
    lines = []
    for r in reports:
        if r.holds:
            lines.append(f"ok    {r.claim}  [{r.claim.status}] checked {r.checked_count} terms")
        else:
            n, c = r.first_counterexample
            lines.append(f"FAIL  {r.claim}  n={n}: coefficient {c}")
    _emit(args, lines, json_lines=[r.to_dict() for r in reports])
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAIL


def cmd_oracle(args) -> int:
    c = O.BiregularConstraint(*args.pair)
    if args.action == "count":
        value = O.count_biregular(args.n, c)
        _emit(args, [str(value)], {"pair": list(c.pair), "n": args.n, "count": str(value)})
        return EXIT_OK
    if args.action == "series":
        s = O.oracle_series(c, args.order)
        _emit(args, [f"{n} {v}" for n, v in enumerate(s.coeffs)], series_to_json(s))
        return EXIT_OK
    dp = O.oracle_series(c, args.order)
    gf = C.gen_function(c, args.order)
    bad = next((i for i, (x, y) in enumerate(zip(dp.coeffs, gf.coeffs)) if x != y), None)
    enum_limit = min(args.order - 1, O.ENUMERATION_LIMIT)
    enum_bad = next((n for n in range(enum_limit + 1)
                     if O.count_biregular_enum(n, c) != dp.coeffs[n]), None)
    identical = bad is None and enum_bad is None
    obj = {"pair": list(c.pair), "N": args.order, "identical": identical,
           "first_mismatch": bad, "enumeration_checked_to": enum_limit,
           "enumeration_mismatch": enum_bad}
    if identical:
        text = [f"identical: DP oracle and eta quotient agree to order {args.order}; "
                f"enumeration agrees for n <= {enum_limit}"]
    else:
        text = [f"MISMATCH: eta quotient at n={bad}, enumeration at n={enum_bad}"]
    _emit(args, text, obj)
    return EXIT_OK if identical else EXIT_FAIL


def cmd_residues(args) -> int:
    form = C.parse_form(args.form, args.mod, args.start)
    res = sorted(C.residues_of_form(form))
    obj = {"form": form.text, "modulus": args.mod, "from": args.start, "residues": res}
    if args.targets is not None:
        rep = C.check_missed_residues([form], args.mod, args.targets)
        obj["targets"] = sorted(rep.targets)
        obj["missed"] = rep.missed
    lines = ["{" + ",".join(map(str, res)) + "}"]
    if args.targets is None:
        _emit(args, lines, obj)
        return EXIT_OK
    hit = sorted(set(args.targets) & set(res))
    lines.append(f"targets {sorted(rep.targets)}: " + ("all missed" if rep.missed else f"hit {hit}"))
    _emit(args, lines, obj)
    return EXIT_OK if rep.missed else EXIT_FAIL


def cmd_scan(args) -> int:
    cands = C.scan(args.pair, args.maxA, args.moduli, args.order)
    lines = [f"{c.A}n+{c.B} mod {c.M}  ({c.checked_count} terms"
             + (f"; implies {len(c.implies)} more)" if c.implies else ")") for c in cands]
    objs = [{"ell": c.ell, "mu": c.mu, "A": c.A, "B": c.B, "M": c.M,
             "checked_count": c.checked_count, "implies": [list(t) for t in c.implies]}
            for c in cands]
    _emit(args, lines, json_lines=objs)
    return EXIT_OK


def cmd_mod8(args) -> int:
    pairs = [tuple(args.pair)] if args.pair else list(C.MOD8_TARGETS)
    ok = True
    lines, objs = [], []
    for p in pairs:
        r = C.mod8_route(*p, N=args.order)
        ok &= r.holds and r.matches_gf_mod8
        classes = ",".join(str(t) for t in r.zero_classes)
        lines.append(f"{'ok  ' if r.holds else 'FAIL'}  R_{{{p[0]},{p[1]}}}: classes {classes} "
                     f"mod {r.A} vanish mod 8 in the theta numerator; "
                     f"quotient matches gf mod 8: {r.matches_gf_mod8}")
        objs.append({"pair": list(p), "A": r.A, "N": r.order, "holds": r.holds,
                     "zero_classes": {str(k): v for k, v in r.zero_classes.items()},
                     "matches_gf_mod8": r.matches_gf_mod8})
    _emit(args, lines, json_lines=objs)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_properties(args) -> int:
    """Randomized ring-law and inverse checks on small random series."""
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.cases):
        n = rng.randint(1, 64)
        a, b, c = (S.from_coeffs(rng.randint(-50, 50) for _ in range(n)) for _ in range(3))
        u = S.from_coeffs([rng.choice((1, -1))] + [rng.randint(-50, 50) for _ in range(n - 1)])
        checks = [
            a * b == b * a,
            (a * b) * c == a * (b * c),
            a * (b + c) == a * b + a * c,
            S.mul(u, S.invert(u)) == S.one(n),
            S.reassemble(S.dissect(a, min(3, n))) == a,
        ]
        failures += checks.count(False)
    print(f"seed {args.seed}: {args.cases} cases, {failures} failures")
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    default_order = _default_order()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-N", "--order", type=int, default=default_order,
                        help="truncation order N (default %(default)s; env QCONG_ORDER)")
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default %(default)s)")
    common.add_argument("--parallelism", type=int, default=1,
                        help="worker processes, 0 = one per CPU (default %(default)s)")

    parser = argparse.ArgumentParser(
        prog="qcong",
        description="Exact q-series engine and verifier for biregular overpartition congruences.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand an eta/theta expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("identities", parents=[common], help="check or export the identity registry")
    p.add_argument("action", choices=("check", "export"))
    p.add_argument("ids", nargs="*", help="identity ids (default: all)")
    p.add_argument("--dissections", action="store_true",
                   help="also compare dissection components")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("verify", parents=[common], help="verify congruence claims")
    p.add_argument("--claims", metavar="FILE", help="JSON claim file (default: built-in catalog)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="combinatorial oracle")
    p.add_argument("action", choices=("compare", "count", "series"))
    p.add_argument("n", nargs="?", type=int, default=0, help="n for 'count'")
    p.add_argument("--pair", type=_pair, required=True, metavar="L,M")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("residues", parents=[common], help="residues of a quadratic form")
    p.add_argument("form", help='e.g. "3i^2+4j^2"')
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--from", dest="start", type=int, choices=(0, 1), default=0)
    p.add_argument("--targets", type=_int_list, default=None,
                   help="comma-separated residues that must be missed")
    p.set_defaults(func=cmd_residues)

    p = sub.add_parser("scan", parents=[common], help="search for candidate congruences")
    p.add_argument("--pair", type=_pair, required=True, metavar="L,M")
    p.add_argument("--maxA", type=int, required=True)
    p.add_argument("--moduli", type=_int_list, required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("mod8", parents=[common], help="theta-sum mod 8 cross-check")
    p.add_argument("--pair", type=_pair, metavar="L,M")
    p.set_defaults(func=cmd_mod8)

    p = sub.add_parser("properties", parents=[common], help="randomized engine self-checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    p.set_defaults(func=cmd_properties)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        parser = build_parser()
    except QSeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UnknownIdentity as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
