import itertools

import pytest

from motivic_power.checks import oracle_equivalence_sweep, punctual_data_sweep
from motivic_power.oracles import (
    WeightProfile,
    coefficient_formula_count,
    finite_power_enumerate,
    partition_count,
    partitions_enumerate,
    punctual_surface_class_oracle,
)
from motivic_power.power import pow_series
from motivic_power.rings import INTEGERS, Polynomial, RingDescriptor
from motivic_power.series import Series

L_RING = RingDescriptor(("L",), laurent=True)


class TestEnumeration:
    def test_three_points_two_values(self):
        # every subset K of a 3-point set with maps into a 2-element
        # weight-1 set: coefficient k counts C(3,k)*2^k
        assert finite_power_enumerate(WeightProfile((2,), 3), 3) == [1, 6, 12, 8]

    def test_no_points(self):
        assert finite_power_enumerate(WeightProfile((5, 2), 0), 4) == [1, 0, 0, 0, 0]

    def test_two_weights(self):
        assert finite_power_enumerate(WeightProfile((1, 1), 2), 2) == [1, 2, 3]

    def test_scale_guard(self):
        with pytest.raises(ValueError):
            finite_power_enumerate(WeightProfile((20,), 20), 3)

    def test_negative_sizes_rejected(self):
        with pytest.raises(ValueError):
            WeightProfile((-1,), 2)


class TestClosedFormula:
    def test_single_weight_coefficient(self):
        counts = coefficient_formula_count(WeightProfile((2,), 3), 4)
        assert counts[1] == 6
        assert counts[4] == 0

    def test_two_weights_coefficient(self):
        counts = coefficient_formula_count(WeightProfile((1, 1), 2), 2)
        assert counts[2] == 3

    def test_matches_enumeration_exhaustively(self):
        for sizes in itertools.product(range(3), repeat=3):
            for points in range(4):
                profile = WeightProfile(sizes, points)
                assert coefficient_formula_count(profile, 5) == \
                    finite_power_enumerate(profile, 5)

    def test_matches_pow_bridge(self):
        for sizes in itertools.product(range(3), repeat=2):
            for points in range(4):
                profile = WeightProfile(sizes, points)
                A = Series(INTEGERS, 4,
                           [1, sizes[0], sizes[1], 0, 0])
                P = pow_series(A, Polynomial.constant(INTEGERS, points))
                assert [c.constant_value() for c in P.coefficients] == \
                    finite_power_enumerate(profile, 4)


class TestPartitions:
    def test_empty_partition(self):
        assert partitions_enumerate(0) == [()]

    def test_small_counts(self):
        assert partition_count(4) == 5
        assert partition_count(10) == 42

    def test_parts_weakly_decreasing_and_sum(self):
        for part in partitions_enumerate(8):
            assert sum(part) == 8
            assert all(a >= b for a, b in zip(part, part[1:]))

    def test_distinct(self):
        parts = partitions_enumerate(9)
        assert len(parts) == len(set(parts))

    def test_guard(self):
        with pytest.raises(ValueError):
            partitions_enumerate(61)


class TestPunctualClasses:
    def test_first_values(self):
        assert punctual_surface_class_oracle(1) == Polynomial.one(L_RING)
        assert punctual_surface_class_oracle(2) == \
            Polynomial(L_RING, {(0,): 1, (1,): 1})
        assert punctual_surface_class_oracle(3) == \
            Polynomial(L_RING, {(0,): 1, (1,): 1, (2,): 1})

    def test_value_at_one_is_partition_count(self):
        for n in range(1, 14):
            assert punctual_surface_class_oracle(n).evaluate_at_ones() == \
                partition_count(n)

    def test_effective(self):
        for n in range(1, 12):
            assert punctual_surface_class_oracle(n).is_effective()

    def test_guard(self):
        with pytest.raises(ValueError):
            punctual_surface_class_oracle(41)


class TestSweeps:
    def test_equivalence_sweep_clean(self):
        assert oracle_equivalence_sweep(max_points=3, max_weight=3,
                                        max_size=2, order=5) is None

    def test_punctual_sweep_clean(self):
        assert punctual_data_sweep(order=10) is None
