"""Cross-validation sweeps wiring the counting oracles to the power operation."""

from __future__ import annotations

import itertools
from typing import List, Optional

from .oracles import (
    WeightProfile,
    coefficient_formula_count,
    finite_power_enumerate,
    partition_count,
    punctual_surface_class_oracle,
)
from .power import exp_map, pow_series
from .rings import INTEGERS, Polynomial, RingDescriptor
from .series import Series


def oracle_equivalence_sweep(max_points: int = 4, max_weight: int = 4,
                             max_size: int = 3, order: int = 6) -> Optional[str]:
    """Exhaustively compare enumeration, closed formula and the power
    operation on every profile in the box; returns the first
    counterexample description, or None when all agree."""
    for sizes in itertools.product(range(max_size + 1), repeat=max_weight):
        A = Series(INTEGERS, order, [1] + [
            sizes[i - 1] if i <= len(sizes) else 0
            for i in range(1, order + 1)
        ])
        for points in range(max_points + 1):
            profile = WeightProfile(sizes, points)
            enumerated = finite_power_enumerate(profile, order)
            formula = coefficient_formula_count(profile, order)
            powered = pow_series(A, Polynomial.constant(INTEGERS, points))
            by_power = [c.constant_value() for c in powered.coefficients]
            if not (enumerated == formula == by_power):
                return (
                    "profile sizes=%s points=%d: enumeration=%s formula=%s "
                    "power=%s" % (list(sizes), points, enumerated, formula,
                                  by_power)
                )
    return None


def punctual_data_sweep(order: int = 12) -> Optional[str]:
    """Check the surface partition sums against the infinite product and
    the partition numbers."""
    ring = RingDescriptor(("L",), laurent=True)
    L = Polynomial.variable(ring, "L")
    product = exp_map([L ** (k - 1) for k in range(1, order + 1)],
                      order=order, ring=ring)
    for n in range(1, order + 1):
        from_partitions = punctual_surface_class_oracle(n)
        if product.coefficient(n) != from_partitions:
            return (
                "degree %d: product gives %s, partition sum gives %s"
                % (n, product.coefficient(n), from_partitions)
            )
        if from_partitions.evaluate_at_ones() != partition_count(n):
            return (
                "degree %d: partition sum at L=1 is %d, expected p(%d)=%d"
                % (n, from_partitions.evaluate_at_ones(), n, partition_count(n))
            )
    return None


def run_oracle_checks(max_points: int = 4, max_weight: int = 4,
                      max_size: int = 3, order: int = 6) -> List[str]:
    """All sweeps; returns failure descriptions (empty means pass)."""
    failures = []
    counterexample = oracle_equivalence_sweep(max_points, max_weight,
                                              max_size, order)
    if counterexample:
        failures.append("equivalence sweep: " + counterexample)
    counterexample = punctual_data_sweep()
    if counterexample:
        failures.append("punctual data sweep: " + counterexample)
    return failures
