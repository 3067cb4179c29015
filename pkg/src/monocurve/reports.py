"""Report assembly shared by the CLI and the HTTP service.

Reports are plain dicts with a fixed schema tag; ``to_json`` renders them
canonically (sorted keys, compact separators) so that parsing and
re-rendering a report is byte-identical.  The only floating-point field is
the labelled ``decimal`` approximation next to each exact fraction.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable

from .curve2 import CurveSemigroup
from .deriv import (
    DerivationBasis,
    cross_validate,
    derivation_generators_arithmetic,
    derivation_generators_brute,
    derivation_generators_p1,
    mu_expected,
)
from .errors import InputError, NotMinimalArithmetic
from .hk import frobenius_power_colength, hk_closed, hk_via_eto, staircase_colength
from .numsemi import NumericalSemigroup
from .validate import CheckResult, run_validation

SCHEMA = "monocurve/1"

DERIVATION_METHODS = ("brute", "closed", "both")
HK_METHODS = ("closed", "eto", "both")
FAMILIES = ("p1", "arithmetic", "all")


def decimal12(value: Fraction) -> float:
    """num/den rounded to 12 significant digits."""
    return float(f"{value.numerator / value.denominator:.12g}")


def fraction_dict(value: Fraction) -> dict:
    return {
        "num": value.numerator,
        "den": value.denominator,
        "decimal": decimal12(value),
    }


def classification_dict(curve: CurveSemigroup) -> dict:
    a = b = d = None
    if curve.arithmetic is not None:
        a, b, d = curve.arithmetic
    return {
        "p": curve.p,
        "degree": curve.degree,
        "arithmetic": curve.arithmetic is not None,
        "a": a,
        "b": b,
        "d": d,
        "cm_assumed": curve.cm_assumed,
    }


def basis_list(basis: DerivationBasis) -> list[dict]:
    return [
        {
            "target": g.target.value,
            "t_exp": g.t_exp,
            "u_exp": g.u_exp,
            "display": g.display(),
        }
        for g in basis.generators
    ]


def closed_form_basis(seq: tuple[int, ...]) -> DerivationBasis:
    if len(seq) == 2:
        return derivation_generators_p1(seq[0], seq[1])
    return derivation_generators_arithmetic(seq)


def pf_report(seq: Iterable[int], assume_cm: bool = False) -> dict:
    curve = CurveSemigroup(seq, assume_cm=assume_cm)
    return {
        "schema": SCHEMA,
        "input_sequence": list(curve.sequence),
        "classification": classification_dict(curve),
        "pf_s1": list(curve.s1.pseudo_frobenius()),
        "pf_s2": list(curve.s2.pseudo_frobenius()),
    }


def derivations_report(
    seq: Iterable[int],
    method: str = "both",
    assume_cm: bool = False,
    cap: int | None = None,
) -> dict:
    if method not in DERIVATION_METHODS:
        raise InputError(f"method must be one of {DERIVATION_METHODS}, got {method!r}")
    curve = CurveSemigroup(seq, assume_cm=assume_cm)
    s = curve.sequence
    validation = None
    if method == "brute":
        basis = derivation_generators_brute(curve, cap=cap)
    elif method == "closed":
        basis = closed_form_basis(s)
    else:
        try:
            result = cross_validate(s, cap=cap)
        except (NotMinimalArithmetic, InputError):
            # no closed form covers this input; fall back to search only
            basis = derivation_generators_brute(curve, cap=cap)
            validation = {"closed_form_available": False}
        else:
            basis = result.brute_basis
            validation = {
                "closed_form_available": True,
                "closed_equals_brute": result.equal,
                "mu_match": result.mu_match,
            }
    report = {
        "schema": SCHEMA,
        "input_sequence": list(s),
        "classification": classification_dict(curve),
        "pf_s1": list(curve.s1.pseudo_frobenius()),
        "pf_s2": list(curve.s2.pseudo_frobenius()),
        "derivation_basis": basis_list(basis),
        "mu": basis.mu,
        "provenance": basis.provenance,
        "hk": fraction_dict(hk_closed(s)),
        "validation": validation,
    }
    return report


def hk_report(
    seq: Iterable[int],
    method: str = "both",
    frobenius_power: int | None = None,
    assume_cm: bool = False,
) -> dict:
    if method not in HK_METHODS:
        raise InputError(f"method must be one of {HK_METHODS}, got {method!r}")
    seq = tuple(seq)
    report: dict = {"schema": SCHEMA, "input_sequence": list(seq)}
    if method in ("closed", "both"):
        report["hk"] = fraction_dict(hk_closed(seq))
    if method in ("eto", "both"):
        staircase = staircase_colength(seq)
        value = hk_via_eto(seq)
        report["hk_eto"] = fraction_dict(value)
        report["staircase"] = {
            "colength": staircase.colength,
            "box_count": staircase.box_count,
            "block_counts": list(staircase.block_counts),
        }
        if "hk" not in report:
            report["hk"] = fraction_dict(value)
    if method == "both":
        report["paths_agree"] = report["hk"] == report["hk_eto"]
    if frobenius_power is not None:
        curve = CurveSemigroup(seq, assume_cm=assume_cm)
        length = frobenius_power_colength(curve, frobenius_power)
        normalized = Fraction(length, frobenius_power**2)
        report["frobenius_power"] = {
            "q": frobenius_power,
            "colength": length,
            "normalized": fraction_dict(normalized),
        }
    return report


def apery_report(seq: Iterable[int], modulus: int) -> dict:
    s1 = NumericalSemigroup(seq)
    return {
        "schema": SCHEMA,
        "input_sequence": list(s1.generators),
        "minimal_generators": list(s1.minimal_generators),
        "modulus": modulus,
        "apery_set": list(s1.apery_set(modulus)),
        "frobenius": s1.frobenius_number(),
    }


def validation_report(family: str = "all", max_top: int = 20) -> dict:
    if family not in FAMILIES:
        raise InputError(f"family must be one of {FAMILIES}, got {family!r}")
    results = run_validation(family, max_top)
    return {
        "schema": SCHEMA,
        "family": family,
        "max_np": max_top,
        "checks": [
            {
                "name": r.name,
                "ok": r.ok,
                "instances": r.instances,
                "detail": r.detail,
            }
            for r in results
        ],
        "ok": all(r.ok for r in results),
    }


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


# -- plain-text rendering ---------------------------------------------------


def render_classification(report: dict) -> list[str]:
    c = report["classification"]
    lines = [
        "sequence: " + " ".join(str(n) for n in report["input_sequence"]),
        f"p = {c['p']}, degree = {c['degree']}",
    ]
    if c["arithmetic"]:
        lines.append(f"arithmetic: a = {c['a']}, b = {c['b']}, d = {c['d']}")
    else:
        lines.append("arithmetic: no")
    lines.append(f"CM assumed: {'yes' if c['cm_assumed'] else 'no'}")
    return lines


def render_pf(report: dict) -> str:
    lines = render_classification(report)
    lines.append(f"PF(S1) = {report['pf_s1']}")
    lines.append(f"PF(S2) = {report['pf_s2']}")
    return "\n".join(lines)


def render_derivations(report: dict) -> str:
    lines = render_classification(report)
    lines.append(f"PF(S1) = {report['pf_s1']}")
    lines.append(f"PF(S2) = {report['pf_s2']}")
    lines.append(f"mu = {report['mu']} ({report['provenance']})")
    lines.append("derivation module generators:")
    for g in report["derivation_basis"]:
        lines.append(f"  {g['display']}")
    v = report.get("validation")
    if v is not None:
        if v.get("closed_form_available"):
            lines.append(f"closed == brute: {str(v['closed_equals_brute']).lower()}")
            lines.append(f"mu matches expected count: {str(v['mu_match']).lower()}")
        else:
            lines.append("closed form: not available for this input")
    hk = report["hk"]
    lines.append(f"e_HK = {_fraction_str(hk)}")
    return "\n".join(lines)


def _fraction_str(hk: dict) -> str:
    if hk["den"] == 1:
        return f"{hk['num']} ({hk['num']}/1)"
    return f"{hk['num']}/{hk['den']} (~{hk['decimal']})"


def render_hk(report: dict) -> str:
    lines = ["sequence: " + " ".join(str(n) for n in report["input_sequence"])]
    if "hk" in report:
        lines.append(f"e_HK = {_fraction_str(report['hk'])}")
    if "staircase" in report:
        st = report["staircase"]
        lines.append(
            f"staircase colength = {st['colength']} "
            f"(box {st['box_count']} + blocks {st['block_counts']})"
        )
        lines.append(f"e_HK via staircase = {_fraction_str(report['hk_eto'])}")
    if "paths_agree" in report:
        lines.append(f"closed == staircase: {str(report['paths_agree']).lower()}")
    if "frobenius_power" in report:
        fp = report["frobenius_power"]
        lines.append(
            f"colength at q = {fp['q']}: {fp['colength']} "
            f"(per q^2: {_fraction_str(fp['normalized'])})"
        )
    return "\n".join(lines)


def render_apery(report: dict) -> str:
    return "\n".join(
        [
            "sequence: " + " ".join(str(n) for n in report["input_sequence"]),
            f"minimal generators: {report['minimal_generators']}",
            f"Frobenius number: {report['frobenius']}",
            f"Apery set mod {report['modulus']}: {report['apery_set']}",
        ]
    )


def render_validation(report: dict) -> str:
    lines = [f"validation sweep: family = {report['family']}, max n_p = {report['max_np']}"]
    for c in report["checks"]:
        r = CheckResult(c["name"], c["ok"], c["instances"], c["detail"])
        lines.append(r.line())
    lines.append("overall: " + ("PASS" if report["ok"] else "FAIL"))
    return "\n".join(lines)
