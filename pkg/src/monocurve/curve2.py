"""The affine semigroup in N^2 attached to a projective monomial curve.

For a strictly increasing gcd-1 sequence n_0 < ... < n_p the semigroup is
generated by (0, n_p), (n_i, n_p - n_i) for i < p, and (n_p, 0); every
generator has coordinate sum n_p, which makes exact membership decidable:
a point (x, y) can only be a sum of exactly (x + y) / n_p generators.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, NamedTuple

from .errors import CmNotAssumed, GcdNotOne, InputError
from .numsemi import (
    GENERATOR_CAP,
    ArithmeticData,
    NumericalSemigroup,
    arithmetic_decomposition,
)


class Point2(NamedTuple):
    """A lattice point in Z^2."""

    x: int
    y: int

    def __add__(self, other: "Point2") -> "Point2":  # type: ignore[override]
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def scale(self, k: int) -> "Point2":
        return Point2(k * self.x, k * self.y)


def _group_basis(degree: int) -> tuple[Point2, Point2]:
    """Basis of the group generated by the curve semigroup inside Z^2."""
    return Point2(0, degree), Point2(1, -1)


def lattice_index(degree: int) -> int:
    """Index of the group generated by the curve semigroup in Z^2, computed
    as the determinant of its basis {(0, n_p), (1, -1)}."""
    b1, b2 = _group_basis(degree)
    return abs(b1.x * b2.y - b1.y * b2.x)


def _validated_sequence(seq: Iterable[int], minimum_length: int = 2) -> tuple[int, ...]:
    s = tuple(seq)
    if len(s) < minimum_length:
        raise InputError(f"need at least {minimum_length} terms, got {len(s)}")
    if any(not isinstance(n, int) for n in s):
        raise InputError("sequence entries must be integers")
    if s[0] < 1:
        raise InputError("sequence entries must be positive")
    if any(s[i] >= s[i + 1] for i in range(len(s) - 1)):
        raise InputError("sequence must be strictly increasing")
    if s[-1] > GENERATOR_CAP:
        raise InputError(f"entries above {GENERATOR_CAP} are not supported")
    g = 0
    for n in s:
        g = gcd(g, n)
    if g != 1:
        raise GcdNotOne(f"gcd of the sequence is {g}, must be 1")
    return s


class CurveSemigroup:
    """The semigroup of exponent pairs of a projective monomial curve.

    Attributes:
        sequence: the defining sequence n_0 < ... < n_p.
        p: index of the last term (the curve lives in P^(p+1)).
        degree: n_p, the common coordinate sum of all generators.
        generators: the p + 2 generating points.
        s1, s2: numerical semigroups of first and second coordinates.
        arithmetic: (a, b, d) when the sequence is minimal arithmetic.
        cm_assumed: whether the coordinate ring is taken as Cohen-Macaulay.
            Automatic for p = 1 and for minimal arithmetic sequences; any
            other input needs an explicit ``assume_cm=True``.
    """

    def __init__(self, sequence: Iterable[int], assume_cm: bool = False):
        seq = _validated_sequence(sequence)
        self.sequence: tuple[int, ...] = seq
        self.p: int = len(seq) - 1
        self.degree: int = seq[-1]
        top = self.degree
        self.generators: tuple[Point2, ...] = (
            Point2(0, top),
            *(Point2(n, top - n) for n in seq[:-1]),
            Point2(top, 0),
        )
        self.s1 = NumericalSemigroup(seq)
        self.s2 = NumericalSemigroup([top - n for n in seq[:-1]] + [top])
        self.arithmetic: ArithmeticData | None = arithmetic_decomposition(seq)
        self.cm_assumed: bool = bool(
            assume_cm or self.p == 1 or self.arithmetic is not None
        )

    def __repr__(self) -> str:
        return f"CurveSemigroup{self.sequence}"

    def in_group(self, pt: Point2) -> bool:
        """True iff pt lies in the group generated by the semigroup in Z^2,
        i.e. its coordinate sum is divisible by the degree."""
        return (pt.x + pt.y) % self.degree == 0

    def group_index(self) -> int:
        """|Z^2 / G| for the group G generated by the semigroup."""
        return lattice_index(self.degree)

    def contains_exact(self, pt: Point2) -> bool:
        """Exact membership by bounded enumeration.

        All generators have coordinate sum ``degree``, so a representation
        of pt uses exactly m = (x + y) / degree of them; membership reduces
        to reaching x as a sum of m values drawn from the generators' first
        coordinates, decided by a bitmask DP over m rounds.
        """
        if pt.x < 0 or pt.y < 0:
            raise InputError(f"membership is over N^2, got {tuple(pt)}")
        total = pt.x + pt.y
        m, rem = divmod(total, self.degree)
        if rem:
            return False
        xparts = (0, *self.sequence)
        mask = (1 << (pt.x + 1)) - 1
        acc = 1
        for _ in range(m):
            nxt = 0
            for g in xparts:
                nxt |= acc << g
            acc = nxt & mask
            if not acc:
                return False
        return bool((acc >> pt.x) & 1)

    def contains_cm(self, pt: Point2) -> bool:
        """Membership via the product-and-group criterion: x in S1, y in S2
        and (x + y) divisible by the degree.  Equals ``contains_exact`` when
        the coordinate ring is Cohen-Macaulay; requires ``cm_assumed``."""
        if not self.cm_assumed:
            raise CmNotAssumed(
                "contains_cm needs the Cohen-Macaulay assumption; "
                "construct the curve with assume_cm=True"
            )
        if pt.x < 0 or pt.y < 0:
            raise InputError(f"membership is over N^2, got {tuple(pt)}")
        return (
            (pt.x + pt.y) % self.degree == 0
            and self.s1.contains(pt.x)
            and self.s2.contains(pt.y)
        )
