"""Edge coverage for the int64 grid layer: every fast route must agree
with plain dict arithmetic, including sign mixes, Laurent offsets and
values far beyond int64."""

import random

import pytest

from motivic_power import gridops
from motivic_power.gridops import (
    NeedExact,
    Slot,
    SlotAccumulator,
    exact_conv_terms,
    from_polynomial,
    grid_terms,
    slot_linear,
    slot_product,
)
from motivic_power.rings import Polynomial, RingDescriptor, _accumulate_product

from conftest import ALL_RINGS, LAURENT_L


def dict_product(pa, pb, nvars):
    acc = {}
    _accumulate_product(acc, pa, pb, nvars)
    return {e: c for e, c in acc.items() if c}


def random_terms(rng, ring, bound, degree=3):
    lo = -degree if ring.laurent else 0
    terms = {}
    for _ in range(rng.randint(0, 6)):
        exps = tuple(rng.randint(lo, degree) for _ in range(ring.nvars))
        c = rng.randint(-bound, bound)
        if c:
            terms[exps] = c
    return terms


@pytest.mark.parametrize("bound", [5, 10 ** 9, 10 ** 30])
def test_exact_conv_matches_dict_product(bound):
    rng = random.Random(bound)
    for ring in ALL_RINGS:
        for _ in range(20):
            ta = random_terms(rng, ring, min(bound, 2 ** 61))
            tb = random_terms(rng, ring, min(bound, 2 ** 61))
            want = dict_product(ta, tb, ring.nvars)
            if bound <= 2 ** 61:
                ga = gridops.grid_from_terms(ta, ring.nvars)
                gb = gridops.grid_from_terms(tb, ring.nvars)
                assert exact_conv_terms(ga, gb, ring.nvars) == want
            sa, sb = Slot.wrap(ta, ring.nvars), Slot.wrap(tb, ring.nvars)
            assert slot_product(sa, sb, ring.nvars).to_terms() == want


def test_big_values_take_the_terms_route():
    big = {(0, 0): 2 ** 100, (1, 1): -(2 ** 80)}
    slot = Slot.wrap(big, 2)
    assert slot.grid is None and slot.terms == big
    small = Slot.wrap({(1, 0): 3}, 2)
    product = slot_product(slot, small, 2)
    assert product.to_terms() == {(1, 0): 3 * 2 ** 100, (2, 1): -3 * 2 ** 80}


def test_slot_scale_exponents():
    for terms in ({(1,): 2, (-2,): 5}, {(1,): 2 ** 90}):
        slot = Slot.wrap(terms, 1)
        scaled = slot.scale_exponents(3)
        assert scaled.to_terms() == {(e[0] * 3,): c for e, c in terms.items()}


def test_slot_divide_exact_and_error():
    slot = Slot.wrap({(0, 0): 6, (1, 2): -9}, 2)
    assert slot.divide_exact(3).to_terms() == {(0, 0): 2, (1, 2): -3}
    with pytest.raises(ArithmeticError):
        slot.divide_exact(4)
    big = Slot.wrap({(0, 0): 3 * 2 ** 100}, 2)
    assert big.divide_exact(3).to_terms() == {(0, 0): 2 ** 100}
    with pytest.raises(ArithmeticError):
        big.divide_exact(7)


def test_slot_linear_mixes_lanes():
    small = Slot.wrap({(0,): 1, (2,): -4}, 1)
    big = Slot.wrap({(0,): 2 ** 70}, 1)
    combo = slot_linear([(3, small), (2, big), (0, big)], 1)
    assert combo.to_terms() == {(0,): 3 + 2 ** 71, (2,): -12}


def test_accumulator_matches_dict_reference():
    rng = random.Random(99)
    for ring in ALL_RINGS:
        pairs = []
        reference = {}
        for _ in range(5):
            ta = random_terms(rng, ring, 50)
            tb = random_terms(rng, ring, 50)
            pairs.append((Slot.wrap(ta, ring.nvars), Slot.wrap(tb, ring.nvars)))
            for e, c in dict_product(ta, tb, ring.nvars).items():
                reference[e] = reference.get(e, 0) + c
        acc = SlotAccumulator(ring.nvars)
        for sa, sb in pairs:
            acc.add_pair(sa, sb)
        reference = {e: c for e, c in reference.items() if c}
        assert acc.result().to_terms() == reference


def test_three_variables_refuse_grids():
    ring3 = RingDescriptor(("x", "y", "z"))
    with pytest.raises(NeedExact):
        gridops.grid_from_terms({(1, 1, 1): 1}, 3)


def test_grid_round_trip_with_laurent_offsets():
    p = Polynomial(LAURENT_L, {(-3,): 7, (2,): -1})
    g = from_polynomial(p)
    assert grid_terms(g, 1) == p.terms


def test_zero_and_unit_slots():
    for ring in ALL_RINGS:
        assert Slot.zero(ring.nvars).is_zero
        one = Slot.one(ring.nvars)
        assert one.to_terms() == {(0,) * ring.nvars: 1}
