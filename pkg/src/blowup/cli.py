"""Command-line front end: ``blowup {invariants,table,strata,survey,selftest}``.

Exit codes: 0 success, 1 self-test mismatch, 2 user error, 3 internal
stabilization failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .errors import BlowupError, NonFiniteLength, RankAssertionFailure, StabilityViolation, StabilizationFailure
from .invariants import compute_invariants, survey, survey_specs
from .localmodule import TruncationParams
from .moduli import compare_strata, enumerate_monomials
from .polyexpr import format_poly, monomial_str, parse_poly
from .ring import BundleSpec, Poly

SOFT_CAP = 6
EXIT_OK, EXIT_MISMATCH, EXIT_USER, EXIT_INTERNAL = 0, 1, 2, 3
INTERNAL_ERRORS = (StabilizationFailure, StabilityViolation, RankAssertionFailure, NonFiniteLength)


class UserError(Exception):
    pass


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    return value


def report_json(report):
    """ReportJson object with its fixed field order."""
    p = report.p
    label, key, agree = compare_strata(report.j, p, report.pair)
    stratum = {
        "relation_label": label.name if label else None,
        "relation": label.relation if label else None,
        "parameters": [str(c) for c in label.parameters] if label and label.parameters else None,
        "pair": list(key.pair),
        "tag": key.tag,
        "name": key.name or None,
        "agree": agree,
    }
    return {
        "j": report.j,
        "polynomial": {
            "canonical": format_poly(p),
            "coefficients": {monomial_str(k, i): str(c) for (k, i), c in p.sorted_items()},
        },
        "lQ": report.lQ,
        "lR1": report.lR1,
        "charge": report.charge,
        "stratum": stratum,
        "bounds_ok": report.bounds_ok,
        "diagnostics": _jsonable(report.diagnostics),
        "tool_version": __version__,
    }


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _check_j(j, force, lo=0):
    if j < lo:
        raise UserError(f"splitting type must be >= {lo}, got {j}")
    if j > SOFT_CAP and not force:
        raise UserError(f"j={j} exceeds the soft cap {SOFT_CAP}; pass --force to run anyway")


def _params(j, max_degree):
    if max_degree is None:
        env = os.environ.get("BLOWUP_MAX_DEGREE")
        if env:
            try:
                max_degree = int(env)
            except ValueError:
                raise UserError(f"BLOWUP_MAX_DEGREE must be an integer, got {env!r}") from None
    if max_degree is not None and max_degree < 1:
        raise UserError("--max-degree must be positive")
    return TruncationParams.for_j(j, max_degree)


def _spec(j, text):
    try:
        return BundleSpec(j, parse_poly(text, j))
    except BlowupError as exc:
        if isinstance(exc, ValueError):
            raise UserError(str(exc)) from None
        raise


def _emit(args, payload):
    sys.stdout.write(payload)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)


def _text_report(report):
    d = report_json(report)
    st = d["stratum"]
    lines = [
        f"j        {report.j}",
        f"p        {d['polynomial']['canonical']}",
        f"l(Q)     {report.lQ}",
        f"l(R^1)   {report.lR1}",
        f"charge   {report.charge}",
        f"stratum  {_stratum_text(st)}",
        f"bounds   {'ok' if report.bounds_ok else 'VIOLATED'}",
    ]
    for note in report.diagnostics.get("bound_notes", ()):
        lines.append(f"  note: {note}")
    return "\n".join(lines) + "\n"


def _stratum_text(st):
    key = f"pair ({st['pair'][0]},{st['pair'][1]}) {st['tag']}"
    if st["name"]:
        key += f" {st['name']}"
    if st["relation_label"] is None:
        return key
    label = st["relation_label"]
    if st["parameters"]:
        label += " [" + ":".join(st["parameters"]) + "]"
    if st["relation"]:
        label += f" via {st['relation']}"
    flag = "agree" if st["agree"] else "DISAGREE"
    return f"{label} | {key} | {flag}"


def cmd_invariants(args):
    _check_j(args.j, args.force)
    spec = _spec(args.j, args.poly)
    report = compute_invariants(spec, _params(args.j, args.max_degree))
    _emit(args, dumps(report_json(report)) if args.json else _text_report(report))
    return EXIT_OK


def _row_label(support):
    return "+".join(f"e{n}" for n in support) if support else "zero"


def _table_rows(j, pairs, params, workers):
    items = survey_specs(j, 2 if pairs else 1)
    reports = survey(j, 2 if pairs else 1, params, workers)
    rows = [(_row_label(s), r) for (s, _), r in zip(items, reports)]
    rows.append(("zero", compute_invariants(BundleSpec(j, Poly()), params)))
    return rows


def format_table(rows, markdown=False):
    head = ("monomial", "l(Q)", "l(R^1)", "charge")
    body = [(label, str(r.lQ), str(r.lR1), str(r.charge)) for label, r in rows]
    if markdown:
        out = ["| " + " | ".join(head) + " |", "|---|---:|---:|---:|"]
        out += ["| " + " | ".join(row) + " |" for row in body]
        return "\n".join(out) + "\n"
    widths = [max(len(row[c]) for row in [head] + body) for c in range(4)]
    fmt = lambda row: " | ".join(  # noqa: E731
        row[c].ljust(widths[c]) if c == 0 else row[c].rjust(widths[c]) for c in range(4)
    )
    out = [fmt(head), "-+-".join("-" * w for w in widths)] + [fmt(row) for row in body]
    return "\n".join(out) + "\n"


def cmd_table(args):
    _check_j(args.j, args.force, lo=2)
    rows = _table_rows(args.j, args.pairs, _params(args.j, args.max_degree), args.workers)
    if args.json:
        payload = dumps([dict(label=label, **report_json(r)) for label, r in rows])
    else:
        payload = format_table(rows, args.markdown)
    _emit(args, payload)
    return EXIT_OK


def cmd_strata(args):
    spec = _spec(args.j, args.poly)
    report = compute_invariants(spec)
    st = report_json(report)["stratum"]
    if args.json:
        payload = dumps({"j": args.j, "polynomial": format_poly(spec.p), **st})
    else:
        payload = f"{format_poly(spec.p)}: {_stratum_text(st)}\n"
    _emit(args, payload)
    return EXIT_OK


def cmd_survey(args):
    _check_j(args.j, args.force, lo=2)
    rows = _table_rows(args.j, args.max_support == 2, _params(args.j, args.max_degree), args.workers)
    groups = {}
    for label, r in rows:
        groups.setdefault(r.pair, []).append((label, r))
    out = []
    for pair in sorted(groups):
        members = groups[pair]
        d = report_json(members[0][1])["stratum"]
        name = f" {d['name']}" if d["name"] else ""
        labels = ", ".join(label for label, _ in members)
        out.append(f"({pair[0]},{pair[1]}) charge {sum(pair)} {d['tag']}{name}: {len(members)} [{labels}]")
    ok = all(r.bounds_ok for _, r in rows)
    out.append(f"{len(rows)} specs, {len(groups)} invariant pairs, bounds {'ok' if ok else 'VIOLATED'}")
    _emit(args, "\n".join(out) + "\n")
    return EXIT_OK


def cmd_selftest(args):
    from . import selftest
    from .reference import ALL_ROWS

    count, failures = selftest.check_rows(compute_invariants)
    if failures:
        return _fail(failures)
    failures = selftest.check_worked_example()
    if failures:
        return _fail(failures)
    failures = selftest.check_closed_forms()
    if failures:
        return _fail(failures)
    print(f"{count} table rows OK, worked example OK, closed forms OK")

    supports = [(j, selftest.spec_of(j, text).p) for j, (_, text, _) in ALL_ROWS if text != "0"]
    failures = selftest.check_scaling() + selftest.check_zero_pattern(supports, 50 if args.deep else 3)
    if args.deep:
        failures += selftest.check_widening()
        monos = [m.monomial for m in enumerate_monomials(3)]
        extra = [(3, Poly({(a.k, a.i): 1, (b.k, b.i): 1})) for t, a in enumerate(monos) for b in monos[t + 1 :]]
        extra += [(3, Poly({(a.k, a.i): 1})) for a in monos]
        failures += selftest.check_zero_pattern(extra, 50, seed=1)
    if failures:
        return _fail(failures)
    print("scaling, zero-pattern" + (" and window-widening" if args.deep else "") + " samples OK")
    return EXIT_OK


def _fail(failures):
    print(f"selftest FAILED: {failures[0]}")
    for f in failures[1:]:
        print(f"  also: {f}")
    return EXIT_MISMATCH


def build_parser():
    ap = argparse.ArgumentParser(prog="blowup", description="Numerical invariants of rank-2 bundles on the blown-up plane.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, poly=True):
        p.add_argument("--j", type=int, required=True, help="splitting type")
        if poly:
            p.add_argument("--poly", default="0", help="extension polynomial, e.g. 'z^-1*u + e4'")
        p.add_argument("--json", action="store_true")
        p.add_argument("--out", metavar="FILE", help="also write the output to FILE")

    p = sub.add_parser("invariants", help="l(Q), l(R^1) and charge of one bundle")
    common(p)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--force", action="store_true", help=f"allow j > {SOFT_CAP}")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("table", help="invariants of every monomial (and pair) for one j")
    common(p, poly=False)
    p.add_argument("--pairs", action="store_true", help="include two-term supports")
    p.add_argument("--markdown", action="store_true")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("strata", help="relation-guard stratum versus invariant-pair stratum")
    p.add_argument("--j", type=int, required=True, choices=(2, 3))
    p.add_argument("--poly", default="0")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("survey", help="group unit-coefficient supports by invariant pair")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--max-support", type=int, default=1, choices=(1, 2))
    p.add_argument("--max-degree", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("selftest", help="check known values and properties")
    p.add_argument("--deep", action="store_true", help="add window-widening and 50-draw zero-pattern checks")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except INTERNAL_ERRORS as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        diag = getattr(exc, "diagnostics", None)
        if diag:
            print(dumps(_jsonable(diag)), file=sys.stderr, end="")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
