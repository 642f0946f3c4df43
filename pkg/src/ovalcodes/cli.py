"""Command-line interface.

Subcommands:
  opoly list      applicable family members at a given m
  opoly verify    run the four certification criteria on one member
  code build      write a construction's generator matrix to JSON
  code analyze    classify a stored code and print/export its distribution
  verify theorem  check a construction's parameter/enumerator claim end to end

Exit codes: 0 success (and verification PASS), 1 verification FAIL,
2 usage or precondition error, 3 work budget exceeded.  JSON output is
canonical (sorted keys, fixed separators): identical inputs give
byte-identical bytes.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import constructions as cx
from . import lincode as lc
from . import opoly as op
from .errors import (
    BudgetExceededError,
    CodeFormatError,
    FamilyError,
    HypothesisError,
)
from .gf2m import FieldCtx, field_new

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# claim ids accepted by `verify theorem`: construction, odd-m + GF(2) gate
CLAIMS = {
    "3.1": ("extended", False),
    "4.1": ("cf", True),
    "5.1": ("cfbar", True),
}

FORMULA_TEXT = {
    "hyperoval-mds": {0: "(q+2)(q^2-1)/2", 2: "q(q-1)^2/2"},
    "extended": {
        0: "(q-1)(q+2)/2",
        1: "(q-1)q(q+2)/2",
        2: "(q-1)q/2",
        3: "(q-2)(q-1)q/2",
    },
    "cf": {
        -2: "(q-1)(q-2)",
        -1: "(q-1)(q^2-5q+12)/2",
        0: "(q-1)(4q-5)",
        1: "(q-1)(q^2-3q+4)/2",
    },
    "cfbar": {
        -1: "(q-1)(q-2)",
        0: "(q-1)(q^2-3q+14)/2",
        1: "3(q-1)(q-2)",
        2: "(q-1)(q^2-3q+4)/2",
    },
}


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def _field_from_args(args) -> FieldCtx:
    return field_new(args.m, modulus=args.modulus, alpha=args.alpha)


def _spec_from_args(args, ctx: FieldCtx, *, verify: bool = True) -> op.OvalPolySpec:
    beta = None
    if getattr(args, "beta", None) is not None:
        lo, hi = args.beta
        beta = (lo, hi)
    return op.make_spec(
        args.family,
        args.m,
        ctx=ctx,
        h=getattr(args, "h", None),
        a=getattr(args, "a", None),
        beta=beta,
        e=getattr(args, "e", None),
        verify=verify,
    )


def _add_field_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True, help="field degree, 2 <= m <= 16")
    p.add_argument(
        "--modulus", type=int, default=None,
        help="irreducible modulus as an int (default: smallest for this m)",
    )
    p.add_argument(
        "--alpha", type=int, default=None,
        help="multiplicative generator (default: smallest primitive element)",
    )


def _add_family_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, help="family name, e.g. Translation, Segre")
    p.add_argument("--h", type=int, default=None, help="Translation exponent parameter")
    p.add_argument("--a", type=int, default=None, help="Subiaco parameter")
    p.add_argument(
        "--beta", type=int, nargs=2, metavar=("LO", "HI"), default=None,
        help="Adelaide beta as two ints (lo hi)",
    )
    p.add_argument("--e", type=int, default=None, help="Adelaide exponent")


# ---------------------------------------------------------------------------
# opoly


def cmd_opoly_list(args) -> int:
    ctx = _field_from_args(args)
    specs = op.catalog(args.m, ctx)
    if args.format == "json":
        rows = []
        for s in specs:
            doc = s.to_json()
            doc["gf2_coefficients"] = s.gf2_coefficients
            rows.append(doc)
        sys.stdout.write(_dump_json(rows))
        return EXIT_OK
    print(f"oval polynomial families at m={args.m} (q={ctx.q}): {len(specs)}")
    print(f"{'family':<24}{'params':<20}{'GF(2) coeffs'}")
    for s in specs:
        params = ", ".join(f"{k}={v}" for k, v in s.params.items()) or "-"
        print(f"{s.family:<24}{params:<20}{'yes' if s.gf2_coefficients else 'no'}")
    return EXIT_OK


def cmd_opoly_verify(args) -> int:
    ctx = _field_from_args(args)
    # Diagnostic mode: admit any member whose expression is computable,
    # so an inapplicable choice (Segre at even m, say) shows up as a
    # criterion FAIL with its witness instead of a refusal.
    spec = _spec_from_args(args, ctx, verify=False)
    table = op.eval_table(spec, ctx)

    results: list[tuple[str, bool | None, object, float]] = []

    t0 = time.perf_counter()
    perm_ok = op.permutation_check(table)
    normalized = table[0] == 0 and table[1] == 1
    if normalized:
        # The scan also exposes non-permutations: f(b) = f(a) makes
        # x = a+b collide with x = 0 in the a-row.
        witness = op.segre_failure_table(table, ctx)
    else:
        witness = ("normalization", table[0], table[1])
    oval_ok = normalized and witness is None
    results.append(("oval-polynomial", oval_ok, None if oval_ok else witness, time.perf_counter() - t0))

    t0 = time.perf_counter()
    w = op.two_to_one_failure_table(table, ctx)
    results.append(("two-to-one", w is None, w, time.perf_counter() - t0))

    t0 = time.perf_counter()
    try:
        w = op.slope_failure_table(table, ctx, allow_large=args.allow_large)
        slope_ok = perm_ok and w is None
        if not perm_ok:
            w = ("not a permutation",)
        results.append(("slope", slope_ok, w if not slope_ok else None, time.perf_counter() - t0))
    except BudgetExceededError as exc:
        results.append(("slope", None, str(exc), time.perf_counter() - t0))

    t0 = time.perf_counter()
    ok = op.affine_root_free_table(table)
    bad = None if ok else next(x for x, v in enumerate(table) if v ^ x ^ 1 == 0)
    results.append(("affine-root-free", ok, bad, time.perf_counter() - t0))

    if args.format == "json":
        doc = {
            "family": spec.family,
            "m": spec.m,
            "params": spec.params,
            "criteria": {
                name: {
                    "pass": okk,
                    "witness": list(wit) if isinstance(wit, tuple) else wit,
                    "seconds": round(dt, 6),
                }
                for name, okk, wit, dt in results
            },
        }
        sys.stdout.write(_dump_json(doc))
    else:
        print(f"{spec.display()} over GF(2^{args.m})")
        for name, okk, wit, dt in results:
            status = "SKIPPED" if okk is None else ("PASS" if okk else "FAIL")
            extra = ""
            if wit is not None and okk is not True:
                extra = f"  witness={wit}"
            print(f"  {name:<18}{status:<8}{dt * 1000:9.2f} ms{extra}")
    return EXIT_OK if all(r[1] is not False for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------
# code


def cmd_code_build(args) -> int:
    ctx = _field_from_args(args)
    spec = _spec_from_args(args, ctx)
    g = cx.build_construction(args.construction, spec, ctx)
    lc.save_code(g, args.out)
    print(f"wrote {g.k} x {g.n} generator over GF(2^{ctx.m}) to {args.out} ({g.label})")
    return EXIT_OK


def _report_doc(report: lc.CodeReport, dist: lc.WeightDistribution, label: str) -> dict:
    return {
        "label": label,
        "n": report.n,
        "k": report.k,
        "d": report.d,
        "d_dual": report.d_dual,
        "class": report.code_class,
        "singleton_defect": report.singleton_defect,
        "griesmer_length": report.griesmer_length,
        "griesmer_almost_optimal": report.griesmer_almost_optimal,
        "distance_optimal": report.distance_optimal,
        "weights": list(dist.counts),
    }


def cmd_code_analyze(args) -> int:
    g = lc.load_code(args.file)
    dist = lc.weight_distribution(g, args.max_budget)
    report = lc.classify_distribution(dist, g.ctx.q, g.k)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(lc.distribution_csv(dist))
    if args.format == "json":
        sys.stdout.write(_dump_json(_report_doc(report, dist, g.label)))
    else:
        print(report.summary())
        if report.distance_optimal is None:
            print("distance-optimality: not determined by the Griesmer bound")
        print(f"dual minimum distance: {report.d_dual}")
        print(f"enumerator: {dist.enumerator()}")
        if args.csv:
            print(f"csv written to {args.csv}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify theorem


def cmd_verify_theorem(args) -> int:
    construction, needs_gf2 = CLAIMS[args.id]
    ctx = _field_from_args(args)
    if args.m < 3:
        raise HypothesisError(f"refused: claim {args.id} requires m >= 3, got m={args.m}")
    if needs_gf2 and args.m % 2 == 0:
        raise HypothesisError(
            f"refused: m must be odd for claim {args.id}, got m={args.m}"
        )
    spec = _spec_from_args(args, ctx)
    if needs_gf2:
        if not spec.gf2_coefficients:
            raise HypothesisError(
                f"refused: claim {args.id} requires a family with coefficients in GF(2); "
                f"{spec.family} does not qualify"
            )

    g = cx.build_construction(construction, spec, ctx)
    dist = lc.weight_distribution(g, args.max_budget)
    report = lc.classify_distribution(dist, ctx.q, g.k)
    q = ctx.q
    exp_n, exp_k, exp_d = cx.expected_parameters(construction, q)
    expected = cx.EXPECTED_COUNTS[construction](q)
    formulas = FORMULA_TEXT[construction]

    failures: list[str] = []
    if (report.n, report.k, report.d) != (exp_n, exp_k, exp_d):
        failures.append(
            f"parameters [{report.n},{report.k},{report.d}] != expected [{exp_n},{exp_k},{exp_d}]"
        )
    if report.code_class != "NMDS":
        failures.append(f"classification {report.code_class} != NMDS")
    term_lines = []
    for off, text in sorted(formulas.items()):
        wt = q + off
        want = expected[wt]
        got = dist.counts[wt] if 0 <= wt <= dist.n else 0
        mark = "ok" if got == want else "MISMATCH"
        term_lines.append(f"  A_{wt} = {got}   formula {text} = {want}   {mark}")
        if got != want:
            failures.append(f"A_{wt}: computed {got}, formula {text} = {want}")
    other = {
        wt: c
        for wt, c in enumerate(dist.counts)
        if c and wt not in expected and wt != 0
    }
    if other:
        failures.append(f"unexpected nonzero weights: {other}")
    pairing_line = ""
    if not failures:
        pr = lc.min_weight_support_pairing(g, args.max_budget)
        pairing_line = (
            f"  min-weight pairing: {pr.primal_count} primal / {pr.dual_count} dual words, "
            f"{pr.primal_classes} classes, one-to-one: {pr.matched}"
        )

    verdict = "PASS" if not failures else "FAIL"
    print(f"claim {args.id} ({construction}) for {spec.display()} at m={args.m}: {verdict}")
    for line in term_lines:
        print(line)
    if pairing_line:
        print(pairing_line)
    for f in failures:
        print(f"  !! {f}")
    return EXIT_OK if not failures else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ovalcodes",
        description="near-MDS codes from oval polynomials over GF(2^m)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_opoly = sub.add_parser("opoly", help="oval polynomial families")
    opoly_sub = p_opoly.add_subparsers(dest="subcommand", required=True)

    p_list = opoly_sub.add_parser("list", help="list applicable families at m")
    _add_field_options(p_list)
    p_list.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p_list.set_defaults(func=cmd_opoly_list)

    p_verify = opoly_sub.add_parser("verify", help="run the four criteria on one member")
    _add_field_options(p_verify)
    _add_family_options(p_verify)
    p_verify.add_argument("--allow-large", action="store_true", help="run the slope scan past m=8")
    p_verify.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p_verify.set_defaults(func=cmd_opoly_verify)

    p_code = sub.add_parser("code", help="build and analyze codes")
    code_sub = p_code.add_subparsers(dest="subcommand", required=True)

    p_build = code_sub.add_parser("build", help="write a construction to a JSON file")
    p_build.add_argument(
        "--construction", required=True, choices=cx.CONSTRUCTIONS,
        help="which generator matrix to build",
    )
    _add_field_options(p_build)
    _add_family_options(p_build)
    p_build.add_argument("--out", required=True, help="output path for the code JSON")
    p_build.set_defaults(func=cmd_code_build)

    p_analyze = code_sub.add_parser("analyze", help="classify a stored code")
    p_analyze.add_argument("file", help="code JSON file")
    p_analyze.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p_analyze.add_argument("--csv", default=None, help="also write the distribution as CSV")
    p_analyze.add_argument(
        "--max-budget", type=int, default=None,
        help="raise the q^k enumeration cap (default 2^28 or OVALCODES_BUDGET)",
    )
    p_analyze.set_defaults(func=cmd_code_analyze)

    p_thm = sub.add_parser("verify", help="verify construction claims")
    thm_sub = p_thm.add_subparsers(dest="subcommand", required=True)
    p_claim = thm_sub.add_parser(
        "theorem",
        help="check parameters, enumerator formula, classification and pairing",
    )
    p_claim.add_argument(
        "--id", required=True, choices=sorted(CLAIMS),
        help="claim id: 3.1 = extended [q+3,3,q]; 4.1 = cf [q+1,3,q-2]; 5.1 = cfbar [q+2,3,q-1]",
    )
    _add_field_options(p_claim)
    _add_family_options(p_claim)
    p_claim.add_argument("--max-budget", type=int, default=None, help="raise the enumeration cap")
    p_claim.set_defaults(func=cmd_verify_theorem)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FamilyError, CodeFormatError, HypothesisError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
