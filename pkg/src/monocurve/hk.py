"""Hilbert-Kunz multiplicity of the curve's coordinate ring.

Three exact routes, all in rational arithmetic:

* ``hk_closed``: 1 + (1/n_p) * sum (n_r - 1)(n_r - n_(r-1)) over the input
  sequence with 0 prepended;
* ``hk_via_eto``: colength of the monomial ideal generated by
  x^(n_r) y^(n_p - n_r) in k[x, y], divided by the index of the curve's
  group inside Z^2 -- the colength is counted by direct enumeration of the
  staircase, independently of the closed formula;
* ``hk_arithmetic``: n0 + p(p+1)d^2 / (2 n_p) for arithmetic sequences.

``frobenius_power_colength`` counts the actual quotient lengths whose
normalized limit the multiplicity is.  Everything is characteristic-free
by construction: only lattice points are ever counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from .curve2 import CurveSemigroup, Point2, _validated_sequence, lattice_index
from .errors import BoxOverflow, CmNotAssumed, InputError, MonocurveError, NotMinimalArithmetic


@dataclass(frozen=True)
class StaircaseReport:
    """Colength of the staircase ideal, with its block decomposition.

    ``colength`` comes from direct enumeration; ``box_count`` (= n_p) and
    ``block_counts`` (= (n_r - 1)(n_r - n_(r-1)) per r) from the monomial
    basis decomposition.  Construction fails if the two disagree.
    """

    colength: int
    box_count: int
    block_counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.colength != self.box_count + sum(self.block_counts):
            raise MonocurveError(
                "staircase enumeration disagrees with the block decomposition: "
                f"{self.colength} != {self.box_count} + sum{self.block_counts}"
            )


def hk_closed(seq: Iterable[int]) -> Fraction:
    """Closed formula for the Hilbert-Kunz multiplicity.

    The input lists the positive exponents n_1 < ... < n_p; n_0 = 0 is
    prepended internally.
    """
    s = _validated_sequence(seq, minimum_length=1)
    full = (0,) + s
    top = s[-1]
    total = sum(
        (full[r] - 1) * (full[r] - full[r - 1]) for r in range(1, len(full))
    )
    return 1 + Fraction(total, top)


def hk_arithmetic(n0: int, p: int, d: int) -> Fraction:
    """Hilbert-Kunz multiplicity n0 + p(p+1)d^2 / (2 n_p) of an arithmetic
    sequence n0, n0+d, ..., n0+pd with gcd 1.

    Minimality of the generating sequence is not needed for this value, so
    only the arithmetic shape and the gcd condition are enforced.
    """
    if n0 < 1 or p < 1 or d < 1:
        raise NotMinimalArithmetic("n0, p and d must be positive")
    if gcd(n0, d) != 1:
        raise NotMinimalArithmetic(f"gcd({n0}, {d}) != 1, sequence gcd is not 1")
    top = n0 + p * d
    return n0 + Fraction(p * (p + 1) * d * d, 2 * top)


def staircase_colength(seq: Iterable[int]) -> StaircaseReport:
    """Colength of J = (x^(n_r) y^(n_p - n_r) | r) in k[x, y], n_0 = 0.

    Counted by enumerating the lattice box [0, n_p)^2 directly: a monomial
    x^i y^j survives iff no generator divides it (anything with an exponent
    >= n_p is already in J, so the box suffices).  The report cross-checks
    the count against the block decomposition of the monomial basis.
    """
    s = _validated_sequence(seq, minimum_length=1)
    full = (0,) + s
    top = s[-1]
    thresholds = [(n, top - n) for n in full]
    count = 0
    for i in range(top):
        # least y-exponent divisible by a generator active in column i;
        # every j below it survives, every j at or above it is in J
        cut = min(b for a, b in thresholds if a <= i)
        count += cut
    blocks = tuple(
        (full[r] - 1) * (full[r] - full[r - 1]) for r in range(1, len(full))
    )
    return StaircaseReport(colength=count, box_count=top, block_counts=blocks)


def hk_via_eto(seq: Iterable[int]) -> Fraction:
    """Hilbert-Kunz multiplicity as staircase colength over lattice index."""
    s = _validated_sequence(seq, minimum_length=1)
    report = staircase_colength(s)
    return Fraction(report.colength, lattice_index(s[-1]))


def frobenius_power_colength(
    curve: CurveSemigroup,
    q: int,
    *,
    box_scale: int = 1,
    max_cells: int = 4_000_000,
) -> int:
    """Length of the quotient by the q-th Frobenius power of the maximal
    ideal: the number of semigroup elements s with s - q*g outside the
    semigroup for every generator g.

    Enumeration runs over the box x <= q*n_p + F(S1) + n_p,
    y <= q*n_p + F(S2) + n_p; outside it, subtracting q*(n_p, 0) or
    q*(0, n_p) stays in the semigroup by the product-and-group membership
    criterion, so nothing is missed.  That bound is why ``cm_assumed`` is
    required; the membership tests themselves use ``contains_exact``.

    ``box_scale`` enlarges the box (the count must not change); it exists
    so tests can verify the bound.
    """
    if not curve.cm_assumed:
        raise CmNotAssumed("the enumeration bound needs the Cohen-Macaulay assumption")
    if q < 1:
        raise InputError(f"the Frobenius power exponent must be >= 1, got {q}")
    if box_scale < 1:
        raise InputError("box_scale must be >= 1")
    top = curve.degree
    f1 = curve.s1.frobenius_number()
    f2 = curve.s2.frobenius_number()
    xmax = box_scale * (q * top + f1 + top)
    ymax = box_scale * (q * top + f2 + top)
    if (xmax + 1) * (ymax + 1) > max_cells:
        raise BoxOverflow(
            f"enumeration box {(xmax + 1)}x{(ymax + 1)} exceeds {max_cells} cells"
        )
    member = [
        [curve.contains_exact(Point2(x, y)) for y in range(ymax + 1)]
        for x in range(xmax + 1)
    ]
    qgens = [(q * g.x, q * g.y) for g in curve.generators]
    count = 0
    for x in range(xmax + 1):
        row = member[x]
        for y in range(ymax + 1):
            if not row[y]:
                continue
            if all(
                x < gx or y < gy or not member[x - gx][y - gy] for gx, gy in qgens
            ):
                count += 1
    return count
