"""Command-line front end.

Subcommands: compute (sequence tables), eval (closed forms at a point),
verify (run the identity registry and write a verdict report), series
(coefficient-exact series checks), table (per-cell view of one registry
entry).  All rationals cross this boundary as "p/q" strings.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
3 report I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .closed_forms import (
    as_np_closed,
    as_p1_closed,
    as_zneg1_alpha1_closed,
    boyadzhiev_ratio_closed,
    conclusion_identity,
    frontczak_rhs,
    generalized_harmonic_relation,
    gould_generalized_lhs,
    gould_generalized_rhs,
    idi1_rhs,
    knuth_flajolet_rhs,
    lemma21_lhs,
    lemma21_rhs,
    pan_closed_form,
    skew_transform_rhs,
    spivey_rhs,
    thm33_rhs,
)
from .errors import DomainError, OutOfValidityRangeError, SeqSpecError
from .exact import binom_int
from .registry import build_registry
from .sequences import harmonic_p, materialize, parse_seq_spec, skew_harmonic
from .verifier import (
    harmonic_genfunc_first_diff,
    run_entry,
    run_suite,
    series_lemma_first_diff,
    skew_genfunc_first_diff,
)

FORMATS = ("text", "json", "csv", "markdown")


class UsageError(Exception):
    pass


def _emit_table(title: str, headers: list[str], rows: list[list[str]], fmt: str, out) -> None:
    if fmt == "json":
        payload = {"table": title, "columns": headers, "rows": [dict(zip(headers, r)) for r in rows]}
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
    elif fmt == "markdown":
        out.write("| " + " | ".join(headers) + " |\n")
        out.write("|" + "|".join("---" for _ in headers) + "|\n")
        for r in rows:
            out.write("| " + " | ".join(r) + " |\n")
    else:
        widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
        out.write("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def _parse_params(pairs: list[str]) -> dict[str, str]:
    out = {}
    for item in pairs or []:
        key, eq, value = item.partition("=")
        if not eq:
            raise UsageError(f"expected name=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


_INT_PARAMS = {"n", "p", "j"}
_SPEC_PARAMS = {"b", "c", "seq"}


def _cast_params(raw: dict[str, str], names: list[str]) -> dict:
    missing = [name for name in names if name not in raw]
    if missing:
        raise UsageError(f"missing --param {', '.join(missing)}")
    extra = [name for name in raw if name not in names]
    if extra:
        raise UsageError(f"unknown parameter(s) {', '.join(extra)}; expected {', '.join(names)}")
    out = {}
    for name in names:
        value = raw[name]
        try:
            if name in _INT_PARAMS:
                out[name] = int(value)
            elif name in _SPEC_PARAMS:
                out[name] = parse_seq_spec(value)
            else:
                out[name] = Fraction(value)
        except (ValueError, ZeroDivisionError, SeqSpecError) as exc:
            raise UsageError(f"bad value for {name}: {exc}") from exc
    return out


def _pair_rows(lhs: Fraction, rhs: Fraction) -> list[tuple[str, str]]:
    return [("lhs", str(lhs)), ("rhs", str(rhs)), ("equal", "true" if lhs == rhs else "false")]


def _oracle_pan(n: int, mu, lam, alpha):
    total = Fraction(0)
    for k in range(n + 1):
        total += binom_int(n, k) * mu**k * lam ** (n - k) * harmonic_p(k, 1, alpha)
    return total


def _eval_gen_harmonic(p):
    return _pair_rows(harmonic_p(p["n"], 1, p["alpha"]), generalized_harmonic_relation(p["n"], p["alpha"]))


def _eval_knuth(p):
    n, lam = p["n"], p["lambda"]
    rhs = knuth_flajolet_rhs(n, lam)  # validates the domain before the oracle divides
    lhs = Fraction(0)
    for k in range(n + 1):
        lhs += Fraction(binom_int(n, k) * (-1) ** k) / (k + lam)
    return _pair_rows(lhs, rhs)


def _eval_pan(p):
    lhs = _oracle_pan(p["n"], p["mu"], p["lambda"], p["alpha"])
    return _pair_rows(lhs, pan_closed_form(p["n"], p["mu"], p["lambda"], p["alpha"]))


def _eval_idi1(p):
    lhs = _oracle_pan(p["n"], Fraction(-1), Fraction(1), p["alpha"])
    return _pair_rows(lhs, idi1_rhs(p["n"], p["alpha"]))


def _eval_spivey(p):
    n, alpha = p["n"], p["alpha"]
    lhs = Fraction(0)
    for k in range(1, n + 1):
        lhs += binom_int(n, k) * harmonic_p(k, 1, alpha)
    return _pair_rows(lhs, spivey_rhs(n, alpha))


def _eval_frontczak(p):
    n = p["n"]
    lhs = sum(binom_int(n, k) * 2**k * skew_harmonic(k) for k in range(n + 1))
    return _pair_rows(lhs, frontczak_rhs(n))


def _eval_skew_transform(p):
    n = p["n"]
    lhs = sum(binom_int(n, k) * skew_harmonic(k) for k in range(n + 1))
    return _pair_rows(lhs, skew_transform_rhs(n))


def _eval_gould(p):
    return _pair_rows(
        gould_generalized_lhs(p["n"], p["j"], p["a"]),
        gould_generalized_rhs(p["n"], p["j"], p["a"]),
    )


def _eval_as_np(p):
    n, pp, z, alpha = p["n"], p["p"], p["z"], p["alpha"]
    lhs = Fraction(0)
    for j in range(n + 1):
        lhs += binom_int(n, j) * j**pp * harmonic_p(j, 1, alpha) * z**j
    return _pair_rows(lhs, as_np_closed(n, pp, z, alpha))


def _eval_as_p1(p):
    n, z, alpha = p["n"], p["z"], p["alpha"]
    lhs = Fraction(0)
    for j in range(n + 1):
        lhs += binom_int(n, j) * j * harmonic_p(j, 1, alpha) * z**j
    return _pair_rows(lhs, as_p1_closed(n, z, alpha))


def _eval_newcoffey1(p):
    n, pp = p["n"], p["p"]
    lhs = Fraction(0)
    for j in range(n + 1):
        lhs += binom_int(n, j) * j**pp * harmonic_p(j, 1, 1) * Fraction(-1) ** j
    rows = _pair_rows(lhs, as_zneg1_alpha1_closed(n, pp))
    rows.append(("rhs_as_printed", str(as_zneg1_alpha1_closed(n, pp, as_printed=True))))
    return rows


def _eval_thm33(p):
    n, alpha = p["n"], p["alpha"]
    c = materialize(p["c"], n)
    lhs = Fraction(0)
    for k in range(n + 1):
        lhs += binom_int(n, k) * (-1) ** k * harmonic_p(k, 1, alpha) * c[k]
    return _pair_rows(lhs, thm33_rhs(c, n, alpha))


def _eval_lemma21(p):
    n, lam = p["n"], p["lambda"]
    b = materialize(p["b"], n)
    return _pair_rows(lemma21_lhs(b, n, lam), lemma21_rhs(b, n, lam))


def _eval_thm23(p):
    n, lam = p["n"], p["lambda"]
    a = materialize(p["c"], n)
    rhs = boyadzhiev_ratio_closed(a, n, lam)  # domain-checked first
    lhs = Fraction(0)
    for k in range(1, n + 1):
        lhs += binom_int(n, k) * a[k] / (k + lam)
    return _pair_rows(lhs, rhs)


def _eval_concl(item):
    def inner(p):
        lhs, rhs = conclusion_identity(item, p["n"], p["alpha"])
        rows = _pair_rows(lhs, rhs)
        if item in ("item3", "item4"):
            _, rhs_sq = conclusion_identity(item, p["n"], p["alpha"], reading="square")
            rows.append(("rhs_square_reading", str(rhs_sq)))
        return rows

    return inner


EVAL_FORMS = {
    "gen-harmonic-relation": (["n", "alpha"], _eval_gen_harmonic),
    "knuth-flajolet": (["n", "lambda"], _eval_knuth),
    "pan-thm3.2": (["n", "mu", "lambda", "alpha"], _eval_pan),
    "idi1-alternating": (["n", "alpha"], _eval_idi1),
    "spivey-generalization": (["n", "alpha"], _eval_spivey),
    "frontczak-variant": (["n"], _eval_frontczak),
    "skew-transform": (["n"], _eval_skew_transform),
    "eq-eulerbnew": (["n", "j", "a"], _eval_gould),
    "as-np": (["n", "p", "z", "alpha"], _eval_as_np),
    "as-p1-exemple1": (["n", "z", "alpha"], _eval_as_p1),
    "as-newcoffey1": (["n", "p"], _eval_newcoffey1),
    "thm3.3-eqnnew8": (["n", "alpha", "c"], _eval_thm33),
    "lemma2.1": (["n", "lambda", "b"], _eval_lemma21),
    "thm2.3": (["n", "lambda", "c"], _eval_thm23),
    "concl-item2": (["n", "alpha"], _eval_concl("item2")),
    "concl-item3": (["n", "alpha"], _eval_concl("item3")),
    "concl-item4": (["n", "alpha"], _eval_concl("item4")),
}


def cmd_compute(args) -> int:
    spec = parse_seq_spec(args.seq)
    values = materialize(spec, args.n_max)
    rows = [[str(n), str(v)] for n, v in enumerate(values)]
    _emit_table(args.seq, ["n", "value"], rows, args.format, sys.stdout)
    return 0


def cmd_eval(args) -> int:
    if args.id not in EVAL_FORMS:
        raise UsageError(f"unknown identity id {args.id!r}; known: {', '.join(sorted(EVAL_FORMS))}")
    names, fn = EVAL_FORMS[args.id]
    params = _cast_params(_parse_params(args.param), names)
    try:
        rows = [[k, str(v)] for k, v in fn(params)]
    except (DomainError, OutOfValidityRangeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    _emit_table(args.id, ["field", "value"], rows, args.format, sys.stdout)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.filter, args.n_max, args.seed)
    payload = report.to_json() if args.format == "json" else report.to_markdown()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return 3
    else:
        sys.stdout.write(payload)
    tiers: dict[str, int] = {}
    for r in report.results:
        tiers[r.tier] = tiers.get(r.tier, 0) + 1
    summary = ", ".join(f"{k}={v}" for k, v in sorted(tiers.items()))
    print(
        f"{len(report.results)} entries ({summary}) in {report.seconds:.2f}s",
        file=sys.stderr,
    )
    return 1 if report.has_assert_failure() else 0


def cmd_series(args) -> int:
    params = _parse_params(args.param)
    order = args.order
    if args.check == "pan-lemma":
        cast = _cast_params(params, ["lambda", "mu", "alpha"])
        a = [-harmonic_p(k, 1, cast["alpha"]) for k in range(order + 1)]
        diff = series_lemma_first_diff(order, cast["lambda"], cast["mu"], a)
    elif args.check == "genfunc-alpha":
        cast = _cast_params(params, ["alpha"])
        diff = harmonic_genfunc_first_diff(order, cast["alpha"])
    elif args.check == "genfunc-skew":
        if params:
            raise UsageError("genfunc-skew takes no parameters")
        diff = skew_genfunc_first_diff(order)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown check {args.check!r}")
    if diff is None:
        print(f"PASS: {args.check} coefficient-exact through order {order}")
        return 0
    n, lhs, rhs = diff
    print(f"FAIL: {args.check} first differing coefficient at n={n}: lhs={lhs} rhs={rhs}")
    return 1


def cmd_table(args) -> int:
    entries = {e.id: e for e in build_registry(args.n_max, args.seed)}
    if args.id not in entries:
        raise UsageError(f"unknown entry id {args.id!r}; known: {', '.join(sorted(entries))}")
    entry = entries[args.id]
    result = run_entry(entry, n_max=args.n_max)
    param_names = sorted({name for cell in entry.cells for name in cell})
    rows = []
    for cell in sorted(entry.cells, key=lambda c: sorted((k, Fraction(v)) for k, v in c.items())):
        try:
            lv, rv = entry.lhs(cell), entry.rhs(cell)
            ok = "yes" if lv == rv else "NO"
            lv, rv = str(lv), str(rv)
        except (DomainError, OutOfValidityRangeError):
            lv = rv = "-"
            ok = "skipped"
        rows.append([str(cell.get(name, "")) for name in param_names] + [lv, rv, ok])
        if args.limit and len(rows) >= args.limit:
            break
    _emit_table(args.id, param_names + ["lhs", "rhs", "equal"], rows, args.format, sys.stdout)
    print(f"tier: {result.tier} ({result.cells} cells, {result.skipped} skipped)", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ghn", description="exact generalized-harmonic identity toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="tabulate a sequence")
    p.add_argument("--seq", required=True, help='e.g. "harmonic:p=1,alpha=1/3"')
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("eval", help="evaluate a closed form at one parameter point")
    p.add_argument("--id", required=True)
    p.add_argument("--param", action="append", default=[], help="name=value (repeatable)")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("verify", help="run the identity registry and report tiers")
    p.add_argument("--filter", default="*", help="fnmatch pattern on entry ids")
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("series", help="coefficient-exact series checks")
    p.add_argument("--check", choices=("pan-lemma", "genfunc-alpha", "genfunc-skew"), required=True)
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--param", action="append", default=[])
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("table", help="per-cell table for one registry entry")
    p.add_argument("--id", required=True)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.set_defaults(fn=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, SeqSpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
