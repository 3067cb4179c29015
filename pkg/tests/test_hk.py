"""Unit tests for the Hilbert-Kunz computations.

The staircase count is compared against a dumb full-grid oracle, and the
Frobenius-power colengths against values frozen from two independent
pre-build oracles (BFS closure and direct region counting).
"""

from fractions import Fraction
from math import gcd

import pytest

from monocurve import (
    BoxOverflow,
    CmNotAssumed,
    CurveSemigroup,
    GcdNotOne,
    InputError,
    NotMinimalArithmetic,
    frobenius_power_colength,
    hk_arithmetic,
    hk_closed,
    hk_via_eto,
    staircase_colength,
)
from monocurve.validate import gcd1_sequences, minimal_arithmetic_sequences

# colengths of the Frobenius powers for [1, 2, 3]; frozen from two
# independent oracles (BFS closure / region count):  2q^2 - [q = 1 mod 3]
COLENGTH_FIXTURES = {1: 1, 2: 8, 4: 31, 8: 128, 16: 511, 32: 2048}


def staircase_grid(seq):
    """Full-grid divisibility count, the dumbest possible oracle."""
    full = (0,) + tuple(seq)
    top = seq[-1]
    thresholds = [(n, top - n) for n in full]
    return sum(
        1
        for i in range(top)
        for j in range(top)
        if not any(i >= a and j >= b for a, b in thresholds)
    )


class TestClosedFormula:
    @pytest.mark.parametrize(
        "seq, value",
        [
            ([1, 2, 3], Fraction(2)),
            ([1, 3, 4], Fraction(11, 4)),
            ([7, 10, 13, 16, 19], Fraction(223, 19)),
            ([1], Fraction(1)),
            ([2, 3], Fraction(7, 3)),
        ],
    )
    def test_goldens(self, seq, value):
        assert hk_closed(seq) == value

    def test_rejects(self):
        with pytest.raises(GcdNotOne):
            hk_closed([2, 4])
        with pytest.raises(InputError):
            hk_closed([3, 3])
        with pytest.raises(InputError):
            hk_closed([])

    def test_bounds(self):
        # strictly above 1 and at most n_p once the degree exceeds 1
        for seq in gcd1_sequences(14, 3):
            value = hk_closed(seq)
            if seq[-1] >= 2:
                assert 1 < value <= seq[-1], seq


class TestArithmeticFormula:
    @pytest.mark.parametrize(
        "args, value",
        [
            ((1, 2, 1), Fraction(2)),
            ((7, 4, 3), Fraction(223, 19)),
            ((3, 2, 1), Fraction(18, 5)),
        ],
    )
    def test_goldens(self, args, value):
        assert hk_arithmetic(*args) == value

    def test_rejects(self):
        with pytest.raises(NotMinimalArithmetic):
            hk_arithmetic(2, 2, 2)  # gcd 2
        with pytest.raises(NotMinimalArithmetic):
            hk_arithmetic(0, 2, 1)

    def test_equals_closed_formula_exhaustively(self):
        count = 0
        for seq in minimal_arithmetic_sequences(60, min_p=1):
            d = seq[1] - seq[0]
            assert hk_arithmetic(seq[0], len(seq) - 1, d) == hk_closed(seq), seq
            count += 1
        assert count > 1500


class TestStaircase:
    def test_golden_123(self):
        report = staircase_colength([1, 2, 3])
        assert report.colength == 6
        assert report.box_count == 3
        assert report.block_counts == (0, 1, 2)

    def test_golden_134(self):
        report = staircase_colength([1, 3, 4])
        assert report.colength == 11
        assert report.block_counts == (0, 4, 3)

    def test_single_generator(self):
        assert staircase_colength([1]).colength == 1

    def test_example_5_4(self):
        report = staircase_colength([7, 10, 13, 16, 19])
        assert report.colength == 223
        assert report.box_count == 19

    def test_agrees_with_grid_oracle(self):
        for seq in gcd1_sequences(12, 4):
            report = staircase_colength(seq)
            assert report.colength == staircase_grid(seq), seq


class TestEtoRoute:
    @pytest.mark.parametrize(
        "seq, value",
        [
            ([1, 2, 3], Fraction(2)),
            ([1, 3, 4], Fraction(11, 4)),
            ([7, 10, 13, 16, 19], Fraction(223, 19)),
        ],
    )
    def test_goldens(self, seq, value):
        assert hk_via_eto(seq) == value

    def test_two_paths_small_sweep(self):
        for seq in gcd1_sequences(14, 3):
            assert hk_closed(seq) == hk_via_eto(seq), seq


class TestFrobeniusPowers:
    def test_frozen_fixtures(self):
        curve = CurveSemigroup([1, 2, 3], assume_cm=True)
        for q, expected in COLENGTH_FIXTURES.items():
            assert frobenius_power_colength(curve, q) == expected, q

    def test_box_bound_is_large_enough(self):
        # doubling the enumeration box must not change the count
        curve = CurveSemigroup([1, 2, 3], assume_cm=True)
        for q in (1, 2, 4, 8):
            base = frobenius_power_colength(curve, q)
            assert frobenius_power_colength(curve, q, box_scale=2) == base
        pair = CurveSemigroup([2, 5])
        for q in (1, 2, 3):
            base = frobenius_power_colength(pair, q)
            assert frobenius_power_colength(pair, q, box_scale=2) == base

    def test_normalized_counts_approach_multiplicity(self):
        curve = CurveSemigroup([2, 5])
        target = hk_closed([2, 5])
        errors = [
            abs(Fraction(frobenius_power_colength(curve, q), q * q) - target)
            for q in (4, 16, 32)
        ]
        assert errors[-1] < errors[0]
        assert errors[-1] < Fraction(1, 8)

    def test_rejects_q_zero(self):
        curve = CurveSemigroup([1, 2, 3], assume_cm=True)
        with pytest.raises(InputError):
            frobenius_power_colength(curve, 0)

    def test_requires_cm(self):
        with pytest.raises(CmNotAssumed):
            frobenius_power_colength(CurveSemigroup([1, 2, 3]), 2)

    def test_box_overflow(self):
        curve = CurveSemigroup([1, 2, 3], assume_cm=True)
        with pytest.raises(BoxOverflow):
            frobenius_power_colength(curve, 8, max_cells=100)
