"""Exact computations for numerical semigroups.

A numerical semigroup is a submonoid of the non-negative integers with
finite complement, i.e. the set of non-negative integer combinations of
generators whose gcd is 1.  Everything here is exact integer arithmetic:
membership comes from a dynamic-programming sieve, the Frobenius number
from the first run of ``min(generators)`` consecutive members, Apery sets
from least members per residue class, and pseudo-Frobenius numbers from
the maximal Apery elements under the semigroup partial order.

Conventions for S = N (the semigroup generated by 1): the Frobenius number
is -1 and the pseudo-Frobenius set is empty; the type is undefined and
asking for it raises.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple

from .errors import (
    GcdNotOne,
    InputError,
    MonocurveError,
    NotInSemigroup,
    NotMinimalArithmetic,
    TypeUndefinedForNaturals,
)

#: Largest generator accepted; keeps the membership sieve bounded.
GENERATOR_CAP = 10**6

#: Hard limit on the sieve length (bytes); growing past this raises.
_TABLE_LIMIT = 1 << 26


@dataclass(frozen=True)
class Factorization:
    """One expression of ``value`` over the minimal generators.

    ``coeffs[i]`` is the multiplicity of the i-th minimal generator;
    ``length`` is the coefficient sum.
    """

    coeffs: tuple[int, ...]
    value: int
    length: int


class ArithmeticData(NamedTuple):
    """Decomposition n0 = a*p + b (0 <= b < p) plus the common difference d."""

    a: int
    b: int
    d: int


class NumericalSemigroup:
    """A numerical semigroup with cached membership and Apery data.

    Instances are immutable after construction; internal caches are grown
    behind a lock, so concurrent reads from multiple threads are safe.
    """

    def __init__(self, generators: Iterable[int]):
        gens = sorted(set(generators))
        if not gens:
            raise InputError("at least one generator is required")
        if any(not isinstance(g, int) for g in gens):
            raise InputError("generators must be integers")
        if gens[0] <= 0:
            raise InputError(f"generators must be positive, got {gens[0]}")
        if gens[-1] > GENERATOR_CAP:
            raise InputError(f"generators above {GENERATOR_CAP} are not supported")
        g = 0
        for n in gens:
            g = gcd(g, n)
        if g != 1:
            raise GcdNotOne(f"gcd of generators is {g}, must be 1")

        self.generators: tuple[int, ...] = tuple(gens)
        self._lock = threading.Lock()
        self._table = bytearray(1)
        self._table[0] = 1
        self._frobenius: int | None = None
        self._apery: dict[int, tuple[int, ...]] = {}
        self._pf: tuple[int, ...] | None = None
        self.minimal_generators: tuple[int, ...] = self._minimalize()

    def __repr__(self) -> str:
        return f"NumericalSemigroup{self.minimal_generators}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.minimal_generators == other.minimal_generators

    def __hash__(self) -> int:
        return hash(self.minimal_generators)

    # -- membership ---------------------------------------------------

    def _ensure_table(self, upto: int) -> bytearray:
        """Grow the membership sieve to cover [0, upto] and return it."""
        table = self._table
        if len(table) > upto:
            return table
        with self._lock:
            table = self._table
            if len(table) > upto:
                return table
            if upto + 1 > _TABLE_LIMIT:
                raise MonocurveError(
                    f"membership sieve would exceed {_TABLE_LIMIT} entries"
                )
            new = bytearray(upto + 1)
            new[: len(table)] = table
            gens = self.generators
            for i in range(len(table), upto + 1):
                for g in gens:
                    if g > i:
                        break
                    if new[i - g]:
                        new[i] = 1
                        break
            self._table = new
            return new

    def contains(self, s: int) -> bool:
        """True iff s is a non-negative integer combination of the generators."""
        if s < 0:
            return False
        table = self._table
        if s < len(table):
            return bool(table[s])
        return bool(self._ensure_table(max(s, 2 * len(table)))[s])

    def _minimalize(self) -> tuple[int, ...]:
        # g is redundant iff g - h lies in the semigroup for some smaller
        # generator h; representations of values < g can never use g itself.
        table = self._ensure_table(self.generators[-1])
        keep = []
        for g in self.generators:
            if any(table[g - h] for h in self.generators if h < g):
                continue
            keep.append(g)
        return tuple(keep)

    @property
    def is_natural(self) -> bool:
        """True iff the semigroup is all of N."""
        return self.minimal_generators == (1,)

    # -- classical invariants ------------------------------------------

    def frobenius_number(self) -> int:
        """Largest integer not in the semigroup; -1 when the semigroup is N."""
        if self._frobenius is not None:
            return self._frobenius
        if self.is_natural:
            self._frobenius = -1
            return -1
        m = self.generators[0]
        bound = 2 * self.generators[-1]
        while True:
            table = self._ensure_table(bound)
            # After m consecutive members everything above is a member,
            # so the largest gap sits below the first such run.
            run = 0
            start = None
            for i in range(len(table)):
                run = run + 1 if table[i] else 0
                if run == m:
                    start = i - m + 1
                    break
            if start is not None:
                self._frobenius = max(i for i in range(start) if not table[i])
                return self._frobenius
            bound *= 2

    def apery_set(self, a: int) -> tuple[int, ...]:
        """The a least members, one per residue class mod a, sorted.

        ``a`` must be a nonzero element of the semigroup.
        """
        if a <= 0 or not self.contains(a):
            raise NotInSemigroup(f"{a} is not a nonzero element of the semigroup")
        cached = self._apery.get(a)
        if cached is not None:
            return cached
        f = self.frobenius_number()
        table = self._ensure_table(max(f + a, a))
        least: dict[int, int] = {}
        s = 0
        while len(least) < a:
            if s >= len(table):
                table = self._ensure_table(2 * len(table))
            if table[s]:
                r = s % a
                if r not in least:
                    least[r] = s
            s += 1
        out = tuple(sorted(least.values()))
        self._apery[a] = out
        return out

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Sorted pseudo-Frobenius numbers: f not in S with f + s in S for all
        nonzero s in S.  Computed as w - a over the Apery elements w maximal
        under the order "w <= w' iff w' - w in S", a the multiplicity."""
        if self._pf is not None:
            return self._pf
        if self.is_natural:
            self._pf = ()
            return self._pf
        a = self.minimal_generators[0]
        ap = self.apery_set(a)
        maximal = [
            w for w in ap if not any(v != w and self.contains(v - w) for v in ap)
        ]
        self._pf = tuple(sorted(w - a for w in maximal))
        return self._pf

    def cm_type(self) -> int:
        """Number of pseudo-Frobenius elements (the Cohen-Macaulay type)."""
        if self.is_natural:
            raise TypeUndefinedForNaturals("the type of N is undefined")
        return len(self.pseudo_frobenius())

    # -- factorizations -------------------------------------------------

    def factorizations(self, s: int) -> list[Factorization]:
        """All coefficient vectors over the minimal generators summing to s,
        in ascending lexicographic coefficient order; empty iff s is not a
        member."""
        if s < 0:
            raise InputError("factorizations need a non-negative target")
        gens = self.minimal_generators
        last = len(gens) - 1
        out: list[Factorization] = []
        coeffs = [0] * len(gens)

        def rec(idx: int, remaining: int) -> None:
            if idx == last:
                q, r = divmod(remaining, gens[idx])
                if r == 0:
                    coeffs[idx] = q
                    out.append(Factorization(tuple(coeffs), s, sum(coeffs)))
                    coeffs[idx] = 0
                return
            g = gens[idx]
            for c in range(remaining // g + 1):
                coeffs[idx] = c
                rec(idx + 1, remaining - c * g)
            coeffs[idx] = 0

        rec(0, s)
        return out

    def length_set(self, s: int) -> set[int]:
        """Set of coefficient sums over all factorizations of a nonzero member."""
        if s == 0:
            raise InputError("length sets are defined for nonzero elements only")
        if not self.contains(s):
            raise NotInSemigroup(f"{s} is not in the semigroup")
        return {f.length for f in self.factorizations(s)}

    def is_homogeneous(self, elements: Iterable[int]) -> bool:
        """True iff every nonzero element of the subset has a singleton
        length set (an empty subset is homogeneous)."""
        elems = sorted(set(elements))
        for t in elems:
            if t < 0 or not self.contains(t):
                raise NotInSemigroup(f"{t} is not in the semigroup")
        return all(len(self.length_set(t)) == 1 for t in elems if t)


# -- arithmetic sequences ------------------------------------------------


def arithmetic_sequence(n0: int, p: int, d: int) -> tuple[int, ...]:
    """The sequence n0, n0+d, ..., n0+p*d."""
    if n0 < 1 or p < 1 or d < 1:
        raise InputError("n0, p and d must be positive")
    return tuple(n0 + i * d for i in range(p + 1))


def arithmetic_decomposition(seq: Iterable[int]) -> ArithmeticData | None:
    """Classify ``seq`` as a minimal arithmetic sequence.

    Returns (a, b, d) with n0 = a*p + b, 0 <= b < p, when the sequence has a
    constant positive difference d, gcd 1, and minimally generates its
    numerical semigroup; otherwise None.
    """
    s = tuple(seq)
    p = len(s) - 1
    if p < 1 or s[0] < 1:
        return None
    d = s[1] - s[0]
    if d <= 0 or any(s[i + 1] - s[i] != d for i in range(p)):
        return None
    if gcd(s[0], d) != 1:
        return None
    if NumericalSemigroup(s).minimal_generators != s:
        return None
    a, b = divmod(s[0], p)
    return ArithmeticData(a, b, d)


def pf_arithmetic(n0: int, p: int, d: int) -> tuple[int, ...]:
    """Closed-form pseudo-Frobenius set of the semigroup of a minimal
    arithmetic sequence with p >= 2, split on b = n0 mod p:

    * b = 0:      {a*n_p - n_{p-i} | 1 <= i <= p-1}
    * b = 1:      {a*n_p - n_{p-i} | 1 <= i <= p}
    * otherwise:  {a*n_p + i*d | 1 <= i <= b-1}
    """
    if p < 2:
        raise NotMinimalArithmetic("the closed form needs p >= 2")
    seq = arithmetic_sequence(n0, p, d)
    if arithmetic_decomposition(seq) is None:
        raise NotMinimalArithmetic(
            f"{seq} is not a minimal arithmetic sequence with gcd 1"
        )
    a, b = divmod(n0, p)
    top = seq[-1]
    if b == 0:
        vals = [a * top - seq[p - i] for i in range(1, p)]
    elif b == 1:
        vals = [a * top - seq[p - i] for i in range(1, p + 1)]
    else:
        vals = [a * top + i * d for i in range(1, b)]
    return tuple(sorted(vals))
