"""Exhaustive small-range validation sweeps.

Each check compares two independent routes to the same invariant (closed
form versus search, formula versus enumeration) over every instance in a
bounded family and reports the mismatches.  The CLI ``validate`` subcommand
and the acceptance tests both run these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterator

from .curve2 import CurveSemigroup, Point2
from .deriv import cross_validate, derivation_generators_brute, mu_expected
from .hk import hk_arithmetic, hk_closed, hk_via_eto
from .numsemi import NumericalSemigroup, arithmetic_sequence, pf_arithmetic


@dataclass
class CheckResult:
    name: str
    ok: bool
    instances: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"{status}  {self.name} ({self.instances} instances){extra}"


def minimal_arithmetic_sequences(
    max_top: int, min_p: int = 2
) -> Iterator[tuple[int, ...]]:
    """All minimal arithmetic sequences with last term <= max_top and
    p >= min_p.  Minimal generating sets have at most n0 elements, so
    p < n0."""
    for n0 in range(2, max_top + 1):
        for p in range(min_p, n0):
            if n0 + p > max_top:
                break
            for d in range(1, (max_top - n0) // p + 1):
                if gcd(n0, d) != 1:
                    continue
                seq = arithmetic_sequence(n0, p, d)
                if NumericalSemigroup(seq).minimal_generators == seq:
                    yield seq


def coprime_pairs(max_n1: int) -> Iterator[tuple[int, int]]:
    for n1 in range(2, max_n1 + 1):
        for n0 in range(1, n1):
            if gcd(n0, n1) == 1:
                yield (n0, n1)


def minimal_pairs(max_n1: int) -> Iterator[tuple[int, int]]:
    """Coprime pairs that are minimal generating sets (i.e. n0 >= 2)."""
    for n0, n1 in coprime_pairs(max_n1):
        if n0 >= 2:
            yield (n0, n1)


def gcd1_sequences(max_top: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """All strictly increasing gcd-1 sequences with entries <= max_top and
    length <= max_len."""
    for length in range(1, max_len + 1):
        for combo in combinations(range(1, max_top + 1), length):
            g = 0
            for n in combo:
                g = gcd(g, n)
            if g == 1:
                yield combo


def random_gcd1_sequences(
    count: int, max_top: int, max_len: int = 6, seed: int = 20260810
) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    out: list[tuple[int, ...]] = []
    while len(out) < count:
        length = rng.randint(1, max_len)
        seq = tuple(sorted(rng.sample(range(1, max_top + 1), length)))
        g = 0
        for n in seq:
            g = gcd(g, n)
        if g == 1:
            out.append(seq)
    return out


# -- individual checks ----------------------------------------------------


def check_p1_closed_vs_brute(max_n1: int = 40, cap: int | None = None) -> CheckResult:
    bad: list[tuple[int, int]] = []
    n = 0
    for n0, n1 in coprime_pairs(max_n1):
        n += 1
        r = cross_validate((n0, n1), cap=cap)
        if not (r.equal and r.mu_match):
            bad.append((n0, n1))
    return CheckResult(
        "two-generator closed form equals search",
        not bad,
        n,
        f"mismatches: {bad[:5]}" if bad else "",
    )


def check_arithmetic_closed_vs_brute(
    max_top: int = 40, cap: int | None = None
) -> CheckResult:
    bad: list[tuple[int, ...]] = []
    n = 0
    for seq in minimal_arithmetic_sequences(max_top):
        n += 1
        r = cross_validate(seq, cap=cap)
        if not r.equal:
            bad.append(seq)
    return CheckResult(
        "arithmetic closed form equals search",
        not bad,
        n,
        f"mismatches: {bad[:5]}" if bad else "",
    )


def check_mu_counts(max_top: int = 40, cap: int | None = None) -> CheckResult:
    bad: list[tuple[int, ...]] = []
    n = 0
    for seq in minimal_arithmetic_sequences(max_top):
        n += 1
        basis = derivation_generators_brute(CurveSemigroup(seq), cap=cap)
        if basis.mu != mu_expected(seq):
            bad.append(seq)
    return CheckResult(
        "search basis size equals expected generator count",
        not bad,
        n,
        f"mismatches: {bad[:5]}" if bad else "",
    )


def check_pf_closed_form(max_top: int = 60) -> CheckResult:
    bad: list[tuple[int, ...]] = []
    n = 0
    for seq in minimal_arithmetic_sequences(max_top):
        n += 1
        p = len(seq) - 1
        d = seq[1] - seq[0]
        if pf_arithmetic(seq[0], p, d) != NumericalSemigroup(seq).pseudo_frobenius():
            bad.append(seq)
    return CheckResult(
        "arithmetic pseudo-Frobenius closed form equals generic engine",
        not bad,
        n,
        f"mismatches: {bad[:5]}" if bad else "",
    )


def check_apery_homogeneity(max_top: int = 40) -> CheckResult:
    bad: list[tuple[int, ...]] = []
    n = 0
    for seq in minimal_arithmetic_sequences(max_top):
        n += 1
        s1 = NumericalSemigroup(seq)
        if not s1.is_homogeneous(s1.apery_set(seq[-1])):
            bad.append(seq)
    return CheckResult(
        "Apery set of the top generator is homogeneous",
        not bad,
        n,
        f"counterexamples: {bad[:5]}" if bad else "",
    )


def check_equal_weighted_sums(max_top: int = 40) -> CheckResult:
    """Every Apery element has the same weighted coefficient sum
    sum(lambda_i * (p - i) * d) across all of its factorizations."""
    bad: list[tuple[int, ...]] = []
    n = 0
    for seq in minimal_arithmetic_sequences(max_top):
        n += 1
        p = len(seq) - 1
        d = seq[1] - seq[0]
        s1 = NumericalSemigroup(seq)
        for s in s1.apery_set(seq[-1]):
            sums = {
                sum(c * (p - i) * d for i, c in enumerate(f.coeffs))
                for f in s1.factorizations(s)
            }
            if len(sums) > 1:
                bad.append(seq)
                break
    return CheckResult(
        "weighted coefficient sums agree across factorizations",
        not bad,
        n,
        f"counterexamples: {bad[:5]}" if bad else "",
    )


def check_hk_two_path(
    max_top: int = 20,
    max_len: int = 5,
    random_count: int = 200,
    random_top: int = 50,
    seed: int = 20260810,
) -> CheckResult:
    bad: list[tuple[int, ...]] = []
    n = 0
    for seq in gcd1_sequences(max_top, max_len):
        n += 1
        if hk_closed(seq) != hk_via_eto(seq):
            bad.append(seq)
    for seq in random_gcd1_sequences(random_count, random_top, seed=seed):
        n += 1
        if hk_closed(seq) != hk_via_eto(seq):
            bad.append(seq)
    return CheckResult(
        "closed formula equals staircase route",
        not bad,
        n,
        f"mismatches: {bad[:5]}" if bad else "",
    )


def check_hk_arithmetic_formula(max_top: int = 60) -> CheckResult:
    bad: list[tuple[int, ...]] = []
    n = 0
    for seq in minimal_arithmetic_sequences(max_top, min_p=1):
        n += 1
        p = len(seq) - 1
        d = seq[1] - seq[0] if p >= 1 else 1
        if hk_arithmetic(seq[0], p, d) != hk_closed(seq):
            bad.append(seq)
    return CheckResult(
        "arithmetic multiplicity formula equals closed formula",
        not bad,
        n,
        f"mismatches: {bad[:5]}" if bad else "",
    )


def arithmetic_curves(max_top: int) -> Iterator[CurveSemigroup]:
    """Curves classified as arithmetic: minimal coprime pairs and minimal
    arithmetic sequences with p >= 2."""
    for n0, n1 in minimal_pairs(max_top):
        yield CurveSemigroup((n0, n1))
    for seq in minimal_arithmetic_sequences(max_top):
        yield CurveSemigroup(seq)


def check_cm_membership_grid(max_top: int = 30) -> CheckResult:
    """contains_cm equals contains_exact on the grid [0, 3*n_p]^2 for every
    arithmetic curve with n_p <= max_top."""
    bad: list[tuple[tuple[int, ...], tuple[int, int]]] = []
    n = 0
    for curve in arithmetic_curves(max_top):
        n += 1
        limit = 3 * curve.degree
        for x in range(limit + 1):
            for y in range(limit + 1):
                pt = Point2(x, y)
                if curve.contains_cm(pt) != curve.contains_exact(pt):
                    bad.append((curve.sequence, (x, y)))
                    break
            else:
                continue
            break
    return CheckResult(
        "product-and-group membership equals exact membership",
        not bad,
        n,
        f"mismatches: {bad[:5]}" if bad else "",
    )


# -- families -------------------------------------------------------------


def run_validation(family: str = "all", max_top: int = 20) -> list[CheckResult]:
    """Run the sweeps for a family of inputs.

    ``p1`` covers coprime pairs, ``arithmetic`` covers minimal arithmetic
    sequences, ``all`` adds the Hilbert-Kunz and membership cross-checks.
    Grid-shaped checks are capped below ``max_top`` where noted to keep the
    run interactive.
    """
    if family not in ("p1", "arithmetic", "all"):
        raise ValueError(f"unknown family {family!r}")
    results: list[CheckResult] = []
    if family in ("p1", "all"):
        results.append(check_p1_closed_vs_brute(max_top))
    if family in ("arithmetic", "all"):
        results.append(check_arithmetic_closed_vs_brute(max_top))
        results.append(check_mu_counts(max_top))
        results.append(check_pf_closed_form(max_top))
        results.append(check_apery_homogeneity(min(max_top, 40)))
        results.append(check_equal_weighted_sums(min(max_top, 40)))
        results.append(check_hk_arithmetic_formula(max_top))
    if family == "all":
        results.append(check_hk_two_path(max_top=min(max_top, 20), max_len=4))
        results.append(check_cm_membership_grid(min(max_top, 20)))
    return results
