"""Command-line driver.

    starinv compute  --ring mat:2:Q:transpose --element "[[1,1],[0,0]]"
    starinv verify   --theorem T3.3 --ring zmod:6 --element 2 --n 2
    starinv sweep    --ring zmod:12 --theorems all
    starinv oracle   --ring zmod:4 --element 2
    starinv fixtures

Exit codes: 0 success/agreement, 1 theorem disagreement or fixture failure,
2 parse or parameter error, 3 capability error (ring not enumerable).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import inverses as inv
from . import lab
from .errors import ContextMismatch, NotEnumerable, ParseError, ValidationFailure
from .fixtures import run_fixtures
from .ring import format_element, parse_element, parse_ring

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_PARSE = 2
EXIT_CAPABILITY = 3


def default_seed():
    raw = os.environ.get("STARINV_SEED")
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"STARINV_SEED must be an integer, got {raw!r}") from None


def _context(spec):
    return None if spec is None else parse_ring(spec)


def _read_element(args, ctx):
    text = args.element
    if args.input is not None:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    if text is None:
        raise ParseError("an element is required (--element or --input)")
    return parse_element(ctx, text)


def _optional(ctx, text):
    return None if text is None else parse_element(ctx, text)


def _show(x):
    return "not-exists" if x is None else format_element(x)


# ---------------------------------------------------------------------------
# commands


def cmd_compute(args, out):
    a = _read_element(args, _context(args.ring))
    pf = inv.compute_portfolio(a, args.n)
    if args.format == "json":
        rec = {
            "ring": a.ctx.spec(),
            "element": format_element(a),
            "classes": {
                c: {"exists": r.exists, "value": _show(r.value), "routes": list(r.routes)}
                for c, r in pf.results.items()
            },
            "witnesses": {k: format_element(w.value) for k, w in pf.witnesses.entries.items()},
            "ep": pf.ep,
        }
        print(json.dumps(rec), file=out)
        return EXIT_OK
    print(f"element {format_element(a)} in {a.ctx.spec()} (n = {pf.n})", file=out)
    for cls, r in pf.results.items():
        routes = "; ".join(r.routes)
        if r.exists:
            print(f"  {cls:10s} {format_element(r.value)}   [{routes}]", file=out)
        else:
            reason = (r.diagnosis or {}).get("reason", "")
            print(f"  {cls:10s} not-exists   ({reason})", file=out)
    print(f"  EP: {'yes' if pf.ep else 'no'}", file=out)
    if pf.witnesses.entries:
        print("  witnesses:", file=out)
        for name, w in pf.witnesses.entries.items():
            print(f"    {name} = {format_element(w.value)}   ({w.equation})", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    ctx = _context(args.ring)
    a = _read_element(args, ctx)
    ctx = a.ctx
    ns = args.n_values or [None]
    status = EXIT_OK
    records = []
    for n in ns:
        v = lab.verify_theorem(
            a,
            args.theorem,
            n=n,
            a_inner=_optional(ctx, args.inner),
            b=_optional(ctx, args.b),
            seed=args.seed,
        )
        records.append(v.to_record())
        print(v.render(), file=out)
        print("PASS" if v.passed else "FAIL", file=out)
        if not v.passed:
            status = EXIT_DISAGREE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.writelines(json.dumps(r) + "\n" for r in records)
    return status


def cmd_sweep(args, out):
    ctx = parse_ring(args.ring)
    theorems = "all" if args.theorems in (None, "all") else [t.strip() for t in args.theorems.split(",")]
    summary = lab.sweep(
        ctx,
        theorems=theorems,
        sampler=args.sampler,
        count=args.count,
        entry_bound=args.entry_bound,
        seed=args.seed,
        audit=args.audit,
        ns=args.n_values,
    )
    for line in summary.lines():
        print(line, file=out)
    if args.output:
        summary.write_report(args.output)
    return EXIT_OK if summary.ok else EXIT_DISAGREE


def cmd_oracle(args, out):
    ctx = parse_ring(args.ring)
    a = _read_element(args, ctx)
    rep = lab.brute_force_oracle(ctx, a)
    print(f"oracle for {format_element(a)} in {ctx.spec()}", file=out)
    print(f"  regular: {'yes' if rep.regular else 'no (not regular)'}", file=out)
    for cls in ("inner", "one-three", "one-four"):
        sols = rep.solutions(cls)
        shown = ", ".join(format_element(x) for x in sols[:6]) + (" ..." if len(sols) > 6 else "")
        print(f"  {cls:10s} {len(sols)} solution(s): {shown}", file=out)
    for cls in ("mp", "group", "core", "dual-core"):
        print(f"  {cls:10s} {_show(rep.value(cls))}", file=out)
    flags = [n for n, f in (("hermitian", rep.hermitian), ("idempotent", rep.idempotent),
                            ("projection", rep.projection), ("EP", rep.ep)) if f]
    print(f"  flags: {', '.join(flags) or 'none'}", file=out)
    pf = inv.compute_portfolio(a)
    rec, ok = lab.oracle_record(a, pf, rep)
    print(f"  solver agreement: {'yes' if ok else 'NO'}", file=out)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(rec) + "\n")
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_fixtures(args, out):
    results = run_fixtures()
    for r in results:
        line = f"{'pass' if r.passed else 'FAIL'}  {r.name}"
        if r.detail:
            line += f"  ({r.detail})"
        print(line, file=out)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} fixtures pass", file=out)
    return EXIT_OK if failed == 0 else EXIT_DISAGREE


# ---------------------------------------------------------------------------
# argument parsing


def _n_list(text):
    try:
        ns = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent list {text!r}") from None
    if not ns or any(n < 1 for n in ns):
        raise argparse.ArgumentTypeError("exponents must be positive integers")
    return ns


def build_parser():
    # argparse exits with 2 on usage errors, which matches the parse-error code
    p = argparse.ArgumentParser(prog="starinv", description="Generalized inverses in rings with involution.")
    sub = p.add_subparsers(dest="command", required=True)

    def element_args(sp, ring_required=False):
        sp.add_argument("--ring", required=ring_required,
                        help="ring spec, e.g. mat:2:Qi:transpose or zmod:6")
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--element", help="inline element, e.g. '[[1,i],[0,0]]' or a JSON record")
        g.add_argument("--input", help="file holding an element record")

    c = sub.add_parser("compute", help="inverse portfolio of one element")
    element_args(c)
    c.add_argument("--n", type=int, default=2, help="exponent for the power-star routes (>= 2)")
    c.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="check one theorem on one element")
    element_args(v)
    v.add_argument("--theorem", required=True, choices=lab.THEOREMS)
    v.add_argument("--n", dest="n_values", type=_n_list, help="exponent(s), comma separated")
    v.add_argument("--inner", help="inner inverse of the element (T4.1)")
    v.add_argument("--b", help="partner element (L2.6)")
    v.add_argument("--output", help="write one JSON line per verdict")

    s = sub.add_parser("sweep", help="run theorems over many elements")
    s.add_argument("--ring", required=True)
    s.add_argument("--theorems", default="all", help="'all' or a comma separated list")
    s.add_argument("--sampler", choices=("exhaustive", "random"), default=None,
                   help="default: exhaustive for finite rings, random otherwise")
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--entry-bound", type=int, default=3)
    s.add_argument("--n", dest="n_values", type=_n_list, help="override exponents")
    s.add_argument("--audit", action="store_true", help="also run the cross-route audit")
    s.add_argument("--output", help="report file (one JSON verdict per line)")

    o = sub.add_parser("oracle", help="exhaustive definitional search (finite rings)")
    element_args(o, ring_required=True)
    o.add_argument("--output")

    sub.add_parser("fixtures", help="re-derive the regression fixtures")

    for sp in (c, v, s, o):
        sp.add_argument("--seed", type=int, default=None, help="default: $STARINV_SEED or 0")
    return p


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "oracle": cmd_oracle,
    "fixtures": cmd_fixtures,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if hasattr(args, "seed") and args.seed is None:
            args.seed = default_seed()
        if args.command == "sweep" and args.sampler is None:
            args.sampler = "exhaustive" if parse_ring(args.ring).is_finite else "random"
        return COMMANDS[args.command](args, out)
    except (ParseError, ContextMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotEnumerable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except ValidationFailure as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
