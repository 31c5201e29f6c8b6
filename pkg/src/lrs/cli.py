"""Command line front end.

Exit codes: 0 on success, 1 when a verification fails (the counterexample
is printed), 2 for usage errors and violated preconditions.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from mpmath import mp, mpf

from .applications import (
    boustrophedon,
    boustrophedon_egf_check,
    stirling_column,
    stirling_triangle,
    wythoff_array,
    wythoff_closed_form_check,
    wythoff_partition_check,
)
from .closed_form import (
    DEFAULT_PRECISION_BITS,
    characteristic_roots,
    closed_form_evaluator,
)
from .errors import LrsError, SingularMatrixError, SpecError, UnknownIdentityError
from .genfunc import genfunc_of, irs_from_gf_shift
from .identities import (
    BilateralIRS2,
    IdentityVerdict,
    addition_formula,
    congruence_suite,
    named_identity_suite,
    negative_index_suite,
    nonlinear_expansion,
    small_m_suite,
    transfer_suite,
)
from .irs_algebra import (
    IrsRepresentation,
    build_toeplitz,
    represent_by_irs,
    represent_weights,
    solve_toeplitz,
)
from .sequence import (
    BilateralSequence,
    SequenceSpec,
    as_fraction,
    format_rational,
    make_irs,
    spec_from_json,
    spec_to_json,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2


def _parse_rationals(text: str) -> list[Fraction]:
    items = [piece.strip() for piece in text.split(",")]
    if not all(items):
        raise SpecError(f"malformed rational list: {text!r}")
    return [as_fraction(piece) for piece in items]


def _parse_indices(text: str) -> list[int]:
    """'lo..hi' inclusive, or a single integer."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise SpecError(f"malformed index range {text!r}") from exc
    if hi < lo:
        raise SpecError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _spec_from_args(args: argparse.Namespace, irs_default: bool = False) -> SequenceSpec:
    spec_path = getattr(args, "spec", None)
    if spec_path is not None:
        if args.coeffs or getattr(args, "initials", None):
            raise SpecError("give either --spec or --coeffs/--initials, not both")
        try:
            with open(spec_path, "r", encoding="utf-8") as handle:
                return spec_from_json(handle.read())
        except OSError as exc:
            raise SpecError(f"cannot read spec file: {exc}") from exc
    if not args.coeffs:
        raise SpecError("missing --coeffs (or --spec FILE)")
    coeffs = _parse_rationals(args.coeffs)
    initials = getattr(args, "initials", None)
    if initials is None:
        if not irs_default:
            raise SpecError("missing --initials")
        return make_irs(coeffs)
    return SequenceSpec(coeffs, _parse_rationals(initials))


def _order2_irs(args: argparse.Namespace) -> BilateralIRS2:
    if not args.coeffs:
        raise SpecError("missing --coeffs")
    coeffs = _parse_rationals(args.coeffs)
    if len(coeffs) != 2:
        raise SpecError(f"this suite needs exactly two coefficients, got {len(coeffs)}")
    return BilateralIRS2(coeffs[0], coeffs[1])


# ---------------------------------------------------------------------------
# output helpers


def _emit_table(rows: list[list[str]], header: list[str] | None = None) -> None:
    body = ([header] if header else []) + rows
    if not body:
        return
    widths = [max(len(row[i]) for row in body) for i in range(len(body[0]))]
    for row in body:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip())


def _emit_csv(rows: list[list[str]], header: list[str] | None = None) -> None:
    writer = csv.writer(sys.stdout)
    if header:
        writer.writerow(header)
    writer.writerows(rows)


def _print_series(
    args: argparse.Namespace,
    start: int,
    values: list[Fraction],
    spec: SequenceSpec | None = None,
) -> None:
    if args.format == "json":
        payload: dict = {"start": start, "values": [str(v) for v in values]}
        if spec is not None:
            # embeds the spec-file schema so the output can be fed back in
            payload["spec"] = json.loads(spec_to_json(spec))
        print(json.dumps(payload))
        return
    rows = [[str(start + i), str(v)] for i, v in enumerate(values)]
    if args.format == "csv":
        _emit_csv(rows, ["n", "value"])
    else:
        _emit_table(rows, ["n", "value"])


def _print_grid(args: argparse.Namespace, rows: list[list], key: str = "rows") -> None:
    text_rows = [[str(v) for v in row] for row in rows]
    if args.format == "json":
        print(json.dumps({key: text_rows}))
    elif args.format == "csv":
        _emit_csv(text_rows)
    else:
        width = max((len(cell) for row in text_rows for cell in row), default=0)
        for row in text_rows:
            print("  ".join(cell.rjust(width) for cell in row).rstrip())


# ---------------------------------------------------------------------------
# subcommand handlers


def _series_window(args: argparse.Namespace, order: int) -> tuple[int, int]:
    if args.start is not None or args.stop is not None:
        if args.count is not None:
            raise SpecError("--count conflicts with --from/--to")
        lo = args.start if args.start is not None else 0
        hi = args.stop if args.stop is not None else lo + 9
        return lo, hi
    count = args.count if args.count is not None else 10
    if count < 1:
        raise SpecError(f"--count must be positive, got {count}")
    return 0, count - 1


def cmd_eval(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    lo, hi = _series_window(args, spec.order)
    seq = BilateralSequence(spec)
    _print_series(args, lo, seq.terms_range(lo, hi), spec)
    return EXIT_OK


def cmd_irs(args: argparse.Namespace) -> int:
    if not args.coeffs and getattr(args, "spec", None) is None:
        raise SpecError("missing --coeffs (or --spec FILE)")
    spec = _spec_from_args(args, irs_default=True)
    spec = make_irs(spec.coefficients)
    lo, hi = _series_window(args, spec.order)
    seq = BilateralSequence(spec)
    values = seq.terms_range(lo, hi)
    if args.format == "table":
        # one space-separated line, matching the printed tables
        print(" ".join(format_rational(v) for v in values))
    else:
        _print_series(args, lo, values, spec)
    return EXIT_OK


def cmd_genfunc(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    gf = genfunc_of(spec)
    weights = irs_from_gf_shift(spec)
    rendering = (
        IrsRepresentation(tuple(weights)).render(target="a[n]", source="F~")
        if weights
        else "a[n] = 0"
    )
    if args.format == "json":
        payload = {
            "numerator": [str(c) for c in gf.numerator.coefficients],
            "denominator": [str(c) for c in gf.denominator.coefficients],
            "shift_weights": [[shift, str(w)] for shift, w in weights],
            "rendering": rendering,
        }
        if args.expand:
            payload["expansion"] = [str(c) for c in gf.expand(args.expand)]
        print(json.dumps(payload))
        return EXIT_OK
    print(f"G(t) = {gf.render()}")
    print(rendering)
    if args.expand:
        _print_series(args, 0, gf.expand(args.expand))
    return EXIT_OK


def cmd_closed_form(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args, irs_default=True)
    decomposition = characteristic_roots(spec.coefficients, args.precision_bits)
    evaluator = closed_form_evaluator(spec, decomposition)
    value = evaluator.value(args.n)
    exact = BilateralSequence(spec).term(args.n)
    with mp.workprec(decomposition.precision_bits):
        error = abs(value - mpf(exact.numerator) / mpf(exact.denominator))
    digits = args.digits
    if args.format == "json":
        print(json.dumps({
            "roots": [
                {"value": mp.nstr(root, digits), "multiplicity": mult}
                for root, mult in decomposition.roots
            ],
            "n": args.n,
            "value": mp.nstr(value, digits),
            "exact": str(exact),
            "abs_error": mp.nstr(error, 8),
        }))
        return EXIT_OK
    for root, mult in decomposition.roots:
        print(f"root {mp.nstr(root, digits)}  multiplicity {mult}")
    print(f"closed form at n={args.n}: {mp.nstr(value, digits)}")
    print(f"exact term: {exact}")
    print(f"abs error: {mp.nstr(error, 8)}")
    return EXIT_OK


def cmd_represent(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    lead, weights = represent_weights(spec)
    terms = [(0, lead)] + [(-1 - j, w) for j, w in enumerate(weights)]
    terms = [(shift, c) for shift, c in terms if c != 0]
    rendering = (
        IrsRepresentation(tuple(terms)).render(target="a[n]", source="F~")
        if terms
        else "a[n] = 0"
    )
    if args.format == "json":
        print(json.dumps({
            "terms": [[shift, str(c)] for shift, c in terms],
            "rendering": rendering,
        }))
    else:
        print(rendering)
    if args.check is not None:
        irs = BilateralSequence(make_irs(spec.coefficients))
        seq = BilateralSequence(spec)
        for n in range(args.check + 1):
            if represent_by_irs(spec, n, irs) != seq.term(n):
                print(f"mismatch at n={n}", file=sys.stderr)
                return EXIT_VERIFY
        print(f"representation matches terms for n=0..{args.check}")
    return EXIT_OK


def cmd_toeplitz(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    system = build_toeplitz(spec)
    try:
        representation = solve_toeplitz(system)
    except SingularMatrixError:
        print(
            "error: singular Toeplitz system (det = 0); this sequence does "
            "not determine the impulse response through these shifts",
            file=sys.stderr,
        )
        return EXIT_USAGE
    rendering = representation.render(target="F~_n", source="a")
    if args.format == "json":
        print(json.dumps({
            "shifts": [shift for shift, _ in representation.terms],
            "coefficients": [str(c) for _, c in representation.terms],
            "rendering": rendering,
        }))
    else:
        print(rendering)
    if args.check is not None:
        seq = BilateralSequence(spec)
        irs = BilateralSequence(make_irs(spec.coefficients))
        for n in range(args.check + 1):
            if representation.evaluate(seq, n) != irs.term(n):
                print(f"mismatch at n={n}", file=sys.stderr)
                return EXIT_VERIFY
        print(f"impulse response recovered for n=0..{args.check}")
    return EXIT_OK


def _print_verdict(args: argparse.Namespace, verdict: IdentityVerdict) -> int:
    if args.format == "json":
        counterexample = None
        if verdict.counterexample is not None:
            counterexample = {
                "params": dict(verdict.counterexample.params),
                "identity": verdict.counterexample.identity,
                "lhs": str(verdict.counterexample.lhs),
                "rhs": str(verdict.counterexample.rhs),
            }
        print(json.dumps({
            "identity": verdict.identity_name,
            "ranges": verdict.parameter_ranges,
            "passed": verdict.passed,
            "cases": verdict.cases,
            "counterexample": counterexample,
        }))
    elif verdict.passed:
        print(
            f"PASS {verdict.identity_name} over {verdict.parameter_ranges} "
            f"({verdict.cases} cases)"
        )
    else:
        ce = verdict.counterexample
        where = ", ".join(f"{k}={v}" for k, v in ce.params.items())
        print(
            f"FAIL {verdict.identity_name} over {verdict.parameter_ranges}: "
            f"at {where}: {ce.identity}: {ce.lhs} != {ce.rhs}"
        )
    return EXIT_OK if verdict.passed else EXIT_VERIFY


def cmd_verify(args: argparse.Namespace) -> int:
    suite = args.suite
    m = _parse_indices(args.m) if args.m else None
    n = _parse_indices(args.n) if args.n else None
    r = _parse_indices(args.r) if args.r else None
    if suite.startswith("named:"):
        name = suite[len("named:"):]
        overrides = {}
        if m is not None:
            overrides["m"] = m
        if n is not None:
            overrides["n"] = n
        verdict = named_identity_suite(name, overrides or None)
        return _print_verdict(args, verdict)
    if suite == "addition":
        irs = _order2_irs(args)
        verdict = addition_formula(irs, m or range(1, 6), r or range(-10, 11))
    elif suite == "nonlinear":
        irs = _order2_irs(args)
        verdict = nonlinear_expansion(
            irs, m or range(1, 6), n or range(0, 7), r or range(-10, 11)
        )
    elif suite == "negative":
        irs = _order2_irs(args)
        verdict = negative_index_suite(irs, m or range(1, 6), n or range(0, 7))
    elif suite == "small-m":
        irs = _order2_irs(args)
        verdict = small_m_suite(irs, n or range(0, 7), r or range(-10, 11))
    elif suite == "transfer":
        spec = _spec_from_args(args)
        verdict = transfer_suite(spec, n or range(0, 5), r or range(-5, 7))
    elif suite == "congruence":
        irs = _order2_irs(args)
        verdict = congruence_suite(
            irs, m or range(2, 7), n or range(0, 7), r or range(0, 11)
        )
    else:
        raise SpecError(
            f"unknown suite {suite!r}; pick addition, nonlinear, negative, "
            "small-m, transfer, congruence or named:<identity>"
        )
    return _print_verdict(args, verdict)


def cmd_stirling(args: argparse.Namespace) -> int:
    if args.triangle:
        n_max = args.n if args.n is not None else 6
        _print_grid(args, stirling_triangle(n_max))
        return EXIT_OK
    if args.k is None:
        raise SpecError("missing --k (or use --triangle)")
    count = args.count if args.count is not None else 10
    _print_series(args, 0, stirling_column(args.k, count))
    return EXIT_OK


def cmd_wythoff(args: argparse.Namespace) -> int:
    rows = args.rows if args.rows is not None else 8
    cols = args.cols if args.cols is not None else 8
    if args.check_partition:
        bound = args.bound if args.bound is not None else 20
        report = wythoff_partition_check(rows, bound)
        if args.format == "json":
            print(json.dumps({
                "ok": report.ok,
                "duplicates": [list(d) for d in report.duplicates],
                "missing": list(report.missing),
            }))
        elif report.ok:
            print(f"partition of 0..{bound} verified over {rows} rows")
        else:
            print(f"duplicates: {report.duplicates}, missing: {report.missing}")
        return EXIT_OK if report.ok else EXIT_VERIFY
    if args.check_closed_form:
        for j in range(rows):
            if not wythoff_closed_form_check(
                args.variant, j, cols - 1, args.precision_bits
            ):
                print(f"closed form mismatch in row {j}", file=sys.stderr)
                return EXIT_VERIFY
        print(f"closed forms match rows 0..{rows - 1} for n=0..{cols - 1}")
        return EXIT_OK
    _print_grid(args, wythoff_array(args.variant, rows, cols))
    return EXIT_OK


def cmd_boustrophedon(args: argparse.Namespace) -> int:
    values = _parse_rationals(args.input)
    transform, triangle = boustrophedon(values)
    if args.check_egf:
        ok = boustrophedon_egf_check(values)
        print("EGF identity holds" if ok else "EGF identity fails")
        if not ok:
            return EXIT_VERIFY
    if args.triangle:
        _print_grid(args, triangle, key="triangle")
    else:
        _print_series(args, 0, transform)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_spec_options(sub: argparse.ArgumentParser, with_initials: bool = True) -> None:
    sub.add_argument("--coeffs", help="comma separated p_1,...,p_r (rationals as p/q)")
    if with_initials:
        sub.add_argument("--initials", help="comma separated a_0,...,a_{r-1}")
    sub.add_argument("--spec", help="JSON file with coefficients and initials")


def _add_window_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--count", type=int, help="number of terms starting at n=0")
    sub.add_argument("--from", dest="start", type=int, help="first index (may be negative)")
    sub.add_argument("--to", dest="stop", type=int, help="last index, inclusive")


def _add_format_option(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format", choices=("table", "json", "csv"), default="table",
        help="output format (default table)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrs",
        description="Exact linear recurring sequences: terms, generating "
        "functions, closed forms, impulse response algebra and identity "
        "verification.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = subparsers.add_parser("eval", help="terms of a sequence")
    _add_spec_options(sub)
    _add_window_options(sub)
    _add_format_option(sub)
    sub.set_defaults(func=cmd_eval)

    sub = subparsers.add_parser("irs", help="impulse response terms")
    _add_spec_options(sub, with_initials=False)
    _add_window_options(sub)
    _add_format_option(sub)
    sub.set_defaults(func=cmd_irs)

    sub = subparsers.add_parser("genfunc", help="rational generating function")
    _add_spec_options(sub)
    sub.add_argument("--expand", type=int, metavar="N", help="also print N series terms")
    _add_format_option(sub)
    sub.set_defaults(func=cmd_genfunc)

    sub = subparsers.add_parser("closed-form", help="root-based closed form")
    _add_spec_options(sub)
    sub.add_argument("--n", type=int, required=True, help="index to evaluate")
    sub.add_argument(
        "--precision-bits", type=int, default=DEFAULT_PRECISION_BITS,
        help=f"working precision (default {DEFAULT_PRECISION_BITS})",
    )
    sub.add_argument("--digits", type=int, default=30, help="printed digits")
    _add_format_option(sub)
    sub.set_defaults(func=cmd_closed_form)

    sub = subparsers.add_parser(
        "represent", help="sequence as a combination of impulse response shifts"
    )
    _add_spec_options(sub)
    sub.add_argument("--check", type=int, metavar="N", help="verify for n=0..N")
    _add_format_option(sub)
    sub.set_defaults(func=cmd_represent)

    sub = subparsers.add_parser(
        "toeplitz", help="recover the impulse response from sequence terms"
    )
    _add_spec_options(sub)
    sub.add_argument("--check", type=int, metavar="N", help="verify for n=0..N")
    _add_format_option(sub)
    sub.set_defaults(func=cmd_toeplitz)

    sub = subparsers.add_parser("verify", help="verify an identity family")
    sub.add_argument(
        "--suite", required=True,
        help="addition | nonlinear | negative | small-m | transfer | "
        "congruence | named:<identity>",
    )
    _add_spec_options(sub)
    sub.add_argument("--m", help="index range lo..hi (use --m=-3..5 for negatives)")
    sub.add_argument("--n", help="index range lo..hi")
    sub.add_argument("--r", help="index range lo..hi")
    _add_format_option(sub)
    sub.set_defaults(func=cmd_verify)

    sub = subparsers.add_parser("stirling", help="Stirling second kind columns")
    sub.add_argument("--k", type=int, help="column index")
    sub.add_argument("--count", type=int, help="number of column entries")
    sub.add_argument("--triangle", action="store_true", help="print triangle rows")
    sub.add_argument("--n", type=int, help="largest triangle row")
    _add_format_option(sub)
    sub.set_defaults(func=cmd_stirling)

    sub = subparsers.add_parser("wythoff", help="Wythoff-style arrays")
    sub.add_argument(
        "--variant", choices=("fibonacci", "pell"), default="fibonacci"
    )
    sub.add_argument("--rows", type=int, help="rows to generate (default 8)")
    sub.add_argument("--cols", type=int, help="columns per row (default 8)")
    sub.add_argument(
        "--check-partition", action="store_true",
        help="check [0, bound] is covered exactly once (fibonacci variant)",
    )
    sub.add_argument("--bound", type=int, help="bound for --check-partition")
    sub.add_argument(
        "--check-closed-form", action="store_true",
        help="compare rows against the explicit closed forms",
    )
    sub.add_argument(
        "--precision-bits", type=int, default=DEFAULT_PRECISION_BITS,
        help="precision for --check-closed-form",
    )
    _add_format_option(sub)
    sub.set_defaults(func=cmd_wythoff)

    sub = subparsers.add_parser("boustrophedon", help="boustrophedon transform")
    sub.add_argument("--input", required=True, help="comma separated terms")
    sub.add_argument("--triangle", action="store_true", help="print the triangle")
    sub.add_argument("--check-egf", action="store_true", help="verify the EGF identity")
    _add_format_option(sub)
    sub.set_defaults(func=cmd_boustrophedon)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownIdentityError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except LrsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


run = main


if __name__ == "__main__":
    sys.exit(main())
