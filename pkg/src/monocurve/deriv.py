"""Generators of the derivation module of the curve's coordinate ring.

Two independent routes are implemented and cross-validated:

* a search engine that, for each pseudo-Frobenius element of a projection,
  ascends through candidate exponents until the defining membership
  conditions hold (with dedicated cases when a projection is all of N);
* closed forms for the two-generator case and for minimal arithmetic
  sequences, split on b = n0 mod p.

Both routes return a ``DerivationBasis`` in a canonical order so results
compare as sets of (target, t_exp, u_exp) triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Callable, Iterable

from .curve2 import CurveSemigroup, Point2
from .errors import (
    CmNotAssumed,
    InputError,
    MonocurveError,
    NotMinimalArithmetic,
    PTooSmall,
    SearchCapExceeded,
)
from .numsemi import arithmetic_decomposition


class Target(str, Enum):
    """Which partial derivative a monomial derivation multiplies."""

    D_DT = "d_dt"
    D_DU = "d_du"

    def __str__(self) -> str:
        return "d/dt" if self is Target.D_DT else "d/du"


@dataclass(frozen=True, order=True)
class DerivationGenerator:
    """A monomial derivation t^t_exp u^u_exp d/dt or ... d/du."""

    target: Target
    t_exp: int
    u_exp: int

    def display(self) -> str:
        """Render like ``t^26 u^44 d/dt``; exponents 0 and 1 are elided."""
        parts = []
        if self.t_exp == 1:
            parts.append("t")
        elif self.t_exp > 1:
            parts.append(f"t^{self.t_exp}")
        if self.u_exp == 1:
            parts.append("u")
        elif self.u_exp > 1:
            parts.append(f"u^{self.u_exp}")
        parts.append(str(self.target))
        return " ".join(parts)


#: The two Euler-type generators, present in every basis.
EULER_T = DerivationGenerator(Target.D_DT, 1, 0)
EULER_U = DerivationGenerator(Target.D_DU, 0, 1)


@dataclass(frozen=True)
class DerivationBasis:
    """A generating set of the derivation module, canonically sorted."""

    generators: tuple[DerivationGenerator, ...]
    provenance: str  # "brute_force" | "closed_form_p1" | "closed_form_arithmetic"

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators):
            raise MonocurveError("duplicate derivation generators")
        if self.generators.count(EULER_T) != 1 or self.generators.count(EULER_U) != 1:
            raise MonocurveError("basis must contain t d/dt and u d/du exactly once")

    @property
    def mu(self) -> int:
        return len(self.generators)

    def displays(self) -> list[str]:
        return [g.display() for g in self.generators]

    def as_set(self) -> frozenset[DerivationGenerator]:
        return frozenset(self.generators)


def _canonical(gens: Iterable[DerivationGenerator]) -> tuple[DerivationGenerator, ...]:
    return tuple(sorted(gens))


def default_search_cap(curve: CurveSemigroup) -> int:
    """Default ceiling for exponent searches, comfortably above the values
    the closed forms predict for arithmetic inputs."""
    top = curve.degree
    if curve.arithmetic is not None:
        a, _b, d = curve.arithmetic
        return (a + d + 2) * top + top * top
    f1 = curve.s1.frobenius_number()
    f2 = curve.s2.frobenius_number()
    return top * (f1 + f2 + 2 * top)


def _ascend(start: int, cap: int, ok: Callable[[int], bool], what: str) -> int:
    for v in range(start, cap + 1):
        if ok(v):
            return v
    raise SearchCapExceeded(what, cap)


def d1_generators_brute(
    curve: CurveSemigroup, cap: int | None = None
) -> list[DerivationGenerator]:
    """The d/du generators, by search.

    When the second projection is not N: one generator t^beta u^(alpha+1)
    per pseudo-Frobenius element alpha of S2, where beta is the least
    positive integer such that (beta, alpha) + (n, n_p - n) lies in the
    semigroup for every n in {0, n_0, ..., n_(p-1)}.  When the second
    projection is N: the single generator t^(1 + c*n_p) with c the least
    non-negative integer satisfying the same conditions for the pair
    (1 + c*n_p, -1).  The generator is added to the pair before testing,
    so every membership query stays inside N^2.
    """
    if not curve.cm_assumed:
        raise CmNotAssumed("derivation search needs the Cohen-Macaulay assumption")
    if cap is None:
        cap = default_search_cap(curve)
    shifts = curve.generators[:-1]  # (0, n_p) and (n_i, n_p - n_i), i < p
    top = curve.degree
    out: list[DerivationGenerator] = []
    if curve.s2.is_natural:
        def ok_c(c: int) -> bool:
            base = Point2(1 + c * top, -1)
            return all(curve.contains_cm(base + sh) for sh in shifts)

        c = _ascend(0, cap, ok_c, "c (d/du generator, S2 = N)")
        out.append(DerivationGenerator(Target.D_DU, 1 + c * top, 0))
    else:
        for alpha in curve.s2.pseudo_frobenius():
            def ok_beta(beta: int, _alpha: int = alpha) -> bool:
                base = Point2(beta, _alpha)
                return all(curve.contains_cm(base + sh) for sh in shifts)

            beta = _ascend(1, cap, ok_beta, f"beta (alpha = {alpha})")
            out.append(DerivationGenerator(Target.D_DU, beta, alpha + 1))
    return out


def d2_generators_brute(
    curve: CurveSemigroup, cap: int | None = None
) -> list[DerivationGenerator]:
    """The d/dt generators, by search.

    When the first projection is not N: one generator t^(delta+1) u^gamma
    per pseudo-Frobenius element delta of S1, where gamma is the least
    positive integer such that (delta, gamma) + (n, n_p - n) lies in the
    semigroup for every n in {n_0, ..., n_p}.  When the first projection
    is N: the single generator u^(1 + e*n_p) with e the least non-negative
    integer satisfying the same conditions for the pair (-1, 1 + e*n_p).
    """
    if not curve.cm_assumed:
        raise CmNotAssumed("derivation search needs the Cohen-Macaulay assumption")
    if cap is None:
        cap = default_search_cap(curve)
    shifts = curve.generators[1:]  # (n_i, n_p - n_i) for i in [0, p] incl. (n_p, 0)
    top = curve.degree
    out: list[DerivationGenerator] = []
    if curve.s1.is_natural:
        def ok_e(e: int) -> bool:
            base = Point2(-1, 1 + e * top)
            return all(curve.contains_cm(base + sh) for sh in shifts)

        e = _ascend(0, cap, ok_e, "e (d/dt generator, S1 = N)")
        out.append(DerivationGenerator(Target.D_DT, 0, 1 + e * top))
    else:
        for delta in curve.s1.pseudo_frobenius():
            def ok_gamma(gamma: int, _delta: int = delta) -> bool:
                base = Point2(_delta, gamma)
                return all(curve.contains_cm(base + sh) for sh in shifts)

            gamma = _ascend(1, cap, ok_gamma, f"gamma (delta = {delta})")
            out.append(DerivationGenerator(Target.D_DT, delta + 1, gamma))
    return out


def derivation_generators_brute(
    curve: CurveSemigroup, cap: int | None = None
) -> DerivationBasis:
    """Full generating set by search: the d/du and d/dt families plus the
    Euler-type generators t d/dt and u d/du."""
    gens = [EULER_T, EULER_U]
    gens += d1_generators_brute(curve, cap)
    gens += d2_generators_brute(curve, cap)
    return DerivationBasis(_canonical(gens), "brute_force")


def derivation_generators_p1(n0: int, n1: int) -> DerivationBasis:
    """Closed-form minimal generating set for a coprime pair n0 < n1,
    split on which projections equal N."""
    if not (0 < n0 < n1):
        raise InputError(f"need 0 < n0 < n1, got ({n0}, {n1})")
    if gcd(n0, n1) != 1:
        raise InputError(f"({n0}, {n1}) must be coprime")
    s1_nat = n0 == 1
    s2_nat = n1 - n0 == 1
    if s1_nat and s2_nat:
        dt = DerivationGenerator(Target.D_DT, 0, 1)
        du = DerivationGenerator(Target.D_DU, 1, 0)
    elif s1_nat:
        dt = DerivationGenerator(Target.D_DT, 0, 1 + (n1 - 2) * n1)
        du = DerivationGenerator(Target.D_DU, n1 - 1, (n1 - 1) * (n1 - 2))
    elif s2_nat:
        dt = DerivationGenerator(Target.D_DT, n0 * (n1 - 1) - n1 + 1, n1 - 1)
        du = DerivationGenerator(Target.D_DU, n0 * (n1 - 1), 0)
    else:
        dt = DerivationGenerator(
            Target.D_DT, n0 * (n1 - 1) - n1 + 1, (n1 - 1) * (n1 - n0)
        )
        du = DerivationGenerator(
            Target.D_DU, n0 * (n1 - 1), (n1 - 1) * (n1 - n0) - n1 + 1
        )
    return DerivationBasis(_canonical([EULER_T, EULER_U, dt, du]), "closed_form_p1")


def derivation_generators_arithmetic(seq: Iterable[int]) -> DerivationBasis:
    """Closed-form minimal generating set for a minimal arithmetic sequence
    with p >= 2, split on b = n0 mod p:

    * b = 0: u d/du, t^(a*n_p+d) u^((d-1)(n_p-1)) d/du, t d/dt, and
      t^(a*n_p - n_(p-i) + 1) u^(d(n_p-i)) d/dt for 1 <= i <= p-1;
    * b = 1: the same with i running to p;
    * b > 1: u d/du, t^((a+1)*n_p+d) u^((d-1)(n_p-1)) d/du, t d/dt, and
      t^(a*n_p + i*d + 1) u^(d(n_p-i)) d/dt for 1 <= i <= b-1.
    """
    s = tuple(seq)
    p = len(s) - 1
    if p < 2:
        raise PTooSmall("use the two-generator closed form for p = 1")
    arith = arithmetic_decomposition(s)
    if arith is None:
        raise NotMinimalArithmetic(
            f"{s} is not a minimal arithmetic sequence with gcd 1"
        )
    a, b, d = arith
    top = s[-1]
    if b in (0, 1):
        du_t = a * top + d
        upper = p - 1 if b == 0 else p
        dt_pairs = [(a * top - s[p - i] + 1, d * (top - i)) for i in range(1, upper + 1)]
    else:
        du_t = (a + 1) * top + d
        dt_pairs = [(a * top + i * d + 1, d * (top - i)) for i in range(1, b)]
    gens = [
        EULER_T,
        EULER_U,
        DerivationGenerator(Target.D_DU, du_t, (d - 1) * (top - 1)),
    ]
    gens += [DerivationGenerator(Target.D_DT, te, ue) for te, ue in dt_pairs]
    return DerivationBasis(_canonical(gens), "closed_form_arithmetic")


def mu_expected(seq: Iterable[int]) -> int:
    """Expected minimal number of generators: 4 when p = 1, else p+2, p+3
    or b+2 according to b = n0 mod p for minimal arithmetic sequences."""
    s = tuple(seq)
    p = len(s) - 1
    if p < 1:
        raise InputError("need at least two terms")
    if p == 1:
        if not (0 < s[0] < s[1]) or gcd(s[0], s[1]) != 1:
            raise InputError(f"{s} must be a coprime increasing pair")
        return 4
    arith = arithmetic_decomposition(s)
    if arith is None:
        raise NotMinimalArithmetic(
            f"{s} is not a minimal arithmetic sequence with gcd 1"
        )
    _a, b, _d = arith
    if b == 0:
        return p + 2
    if b == 1:
        return p + 3
    return b + 2


@dataclass(frozen=True)
class CrossValidation:
    """Closed form versus search on the same input."""

    closed_form_basis: DerivationBasis
    brute_basis: DerivationBasis
    equal: bool
    mu_match: bool


def cross_validate(seq: Iterable[int], cap: int | None = None) -> CrossValidation:
    """Run both routes on a sequence covered by a closed form (p = 1 or a
    minimal arithmetic sequence) and compare them as sets."""
    s = tuple(seq)
    p = len(s) - 1
    if p == 1:
        closed = derivation_generators_p1(s[0], s[1])
    else:
        closed = derivation_generators_arithmetic(s)
    brute = derivation_generators_brute(CurveSemigroup(s), cap=cap)
    mu = mu_expected(s)
    return CrossValidation(
        closed_form_basis=closed,
        brute_basis=brute,
        equal=closed.as_set() == brute.as_set(),
        mu_match=closed.mu == mu and brute.mu == mu,
    )
