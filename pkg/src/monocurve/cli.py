"""Command-line front end.

A thin client over the library: parses arguments, delegates to the report
builders and prints either plain text or canonical JSON.  Exit codes:
0 success, 1 invalid input, 2 search/enumeration cap exceeded,
3 validation sweep failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import reports
from .errors import BoxOverflow, InputError, SearchCapExceeded

CAP_ENV_VAR = "MONOCURVE_SEARCH_CAP"


def _sequence_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "sequence",
        type=int,
        nargs="+",
        metavar="N",
        help="strictly increasing positive integers with gcd 1",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monocurve",
        description=(
            "Exact invariants of projective monomial curves: pseudo-Frobenius "
            "sets, derivation module generators and Hilbert-Kunz multiplicity."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit a canonical JSON report"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_pf = sub.add_parser(
        "pf", parents=[common], help="pseudo-Frobenius sets of both projections"
    )
    _sequence_arg(p_pf)
    p_pf.set_defaults(func=cmd_pf)

    p_der = sub.add_parser(
        "derivations",
        parents=[common],
        help="generators of the derivation module",
    )
    _sequence_arg(p_der)
    p_der.add_argument(
        "--method",
        choices=reports.DERIVATION_METHODS,
        default="both",
        help="search, closed form, or both with a cross-check (default: both)",
    )
    p_der.add_argument(
        "--assume-cm",
        action="store_true",
        help="assert Cohen-Macaulayness for inputs where it is not automatic",
    )
    p_der.add_argument(
        "--cap",
        type=int,
        default=None,
        help=f"exponent search cap (default: derived; env {CAP_ENV_VAR} overrides)",
    )
    p_der.set_defaults(func=cmd_derivations)

    p_hk = sub.add_parser(
        "hk", parents=[common], help="Hilbert-Kunz multiplicity"
    )
    _sequence_arg(p_hk)
    p_hk.add_argument(
        "--method",
        choices=reports.HK_METHODS,
        default="both",
        help="closed formula, staircase route, or both (default: both)",
    )
    p_hk.add_argument(
        "--frobenius-power",
        type=int,
        default=None,
        metavar="Q",
        help="also report the colength of the q-th Frobenius power",
    )
    p_hk.add_argument(
        "--assume-cm",
        action="store_true",
        help="needed for --frobenius-power on non-automatic inputs",
    )
    p_hk.set_defaults(func=cmd_hk)

    p_ap = sub.add_parser(
        "apery", parents=[common], help="Apery set of the first projection"
    )
    _sequence_arg(p_ap)
    p_ap.add_argument(
        "--mod", type=int, required=True, metavar="A", help="modulus (must lie in S1)"
    )
    p_ap.set_defaults(func=cmd_apery)

    p_val = sub.add_parser(
        "validate",
        parents=[common],
        help="run the invariant sweeps and print a pass/fail table",
    )
    p_val.add_argument("--max-np", type=int, default=20, metavar="N")
    p_val.add_argument("--family", choices=reports.FAMILIES, default="all")
    p_val.set_defaults(func=cmd_validate)

    return parser


def resolve_cap(cli_cap: int | None) -> int | None:
    if cli_cap is not None:
        if cli_cap <= 0:
            raise InputError("--cap must be a positive integer")
        return cli_cap
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value <= 0:
        raise InputError(f"{CAP_ENV_VAR} must be a positive integer, got {raw!r}")
    return value


def _emit(report: dict, as_json: bool, render) -> None:
    if as_json:
        print(reports.to_json(report))
    else:
        print(render(report))


def _warn_assumed_cm(args) -> None:
    if getattr(args, "assume_cm", False):
        print(
            "warning: Cohen-Macaulayness assumed, not verified; "
            "results are only meaningful if the assumption holds",
            file=sys.stderr,
        )


def cmd_pf(args) -> int:
    report = reports.pf_report(args.sequence)
    _emit(report, args.json, reports.render_pf)
    return 0


def cmd_derivations(args) -> int:
    _warn_assumed_cm(args)
    report = reports.derivations_report(
        args.sequence,
        method=args.method,
        assume_cm=args.assume_cm,
        cap=resolve_cap(args.cap),
    )
    _emit(report, args.json, reports.render_derivations)
    return 0


def cmd_hk(args) -> int:
    _warn_assumed_cm(args)
    report = reports.hk_report(
        args.sequence,
        method=args.method,
        frobenius_power=args.frobenius_power,
        assume_cm=args.assume_cm,
    )
    _emit(report, args.json, reports.render_hk)
    return 0


def cmd_apery(args) -> int:
    report = reports.apery_report(args.sequence, args.mod)
    _emit(report, args.json, reports.render_apery)
    return 0


def cmd_validate(args) -> int:
    report = reports.validation_report(args.family, args.max_np)
    _emit(report, args.json, reports.render_validation)
    return 0 if report["ok"] else 3


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SearchCapExceeded, BoxOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
