import random

import pytest

from motivic_power.axioms import random_polynomial
from motivic_power.expressions import (
    ParseError,
    parse_polynomial,
    parse_series,
)
from motivic_power.rings import INTEGERS, Polynomial, RingDescriptor
from motivic_power.series import Series

UV = RingDescriptor(("u", "v"))
LAURENT_L = RingDescriptor(("L",), laurent=True)


class TestParsing:
    def test_simple_sum(self):
        assert parse_polynomial("1+u*v", UV) == \
            Polynomial(UV, {(0, 0): 1, (1, 1): 1})

    def test_laurent_negative_exponent(self):
        assert parse_polynomial("L^-1", LAURENT_L) == \
            Polynomial.monomial(LAURENT_L, (-1,))
        assert parse_polynomial("L^(-2)", LAURENT_L) == \
            Polynomial.monomial(LAURENT_L, (-2,))

    def test_unknown_variable(self):
        with pytest.raises(ParseError, match="unknown variable 'w'"):
            parse_polynomial("1+w", UV)

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_polynomial("1 +\n  w", UV)
        assert err.value.line == 2
        assert err.value.column == 3

    def test_negative_exponent_needs_laurent(self):
        with pytest.raises(ParseError, match="Laurent"):
            parse_polynomial("u^-1", UV)

    def test_negative_exponent_only_on_variables(self):
        with pytest.raises(ParseError, match="variables"):
            parse_polynomial("(1+u)^-1", UV)

    def test_parenthesized_powers(self):
        assert parse_polynomial("(1+u)^2", UV) == \
            Polynomial(UV, {(0, 0): 1, (1, 0): 2, (2, 0): 1})

    def test_integer_arithmetic(self):
        assert parse_polynomial("2^3 - (4-1)*5", INTEGERS) == \
            Polynomial.constant(INTEGERS, -7)

    def test_unary_minus(self):
        assert parse_polynomial("-u^2 + 1", UV) == \
            Polynomial(UV, {(2, 0): -1, (0, 0): 1})

    def test_syntax_errors(self):
        for bad in ("1+", "u v", "(1+u", "*3", "u^", "u^^2", "1..2"):
            with pytest.raises(ParseError):
                parse_polynomial(bad, UV)


class TestRoundTrips:
    def test_parse_after_print_is_identity(self):
        rng = random.Random(3)
        for ring in (INTEGERS, LAURENT_L, UV):
            for _ in range(25):
                p = random_polynomial(rng, ring, max_degree=3, coeff_bound=9)
                assert parse_polynomial(str(p), ring) == p

    def test_print_after_parse_normalizes_whitespace(self):
        messy = "  1 +   u * v\n - 2*u^2 "
        p = parse_polynomial(messy, UV)
        assert str(p) == "-2*u^2 + u*v + 1"
        assert parse_polynomial(str(p), UV) == p


class TestSeriesParsing:
    def test_basic(self):
        S = parse_series("1+t", INTEGERS, 3)
        assert S == Series(INTEGERS, 3, [1, 1, 0, 0])

    def test_polynomial_coefficients(self):
        S = parse_series("1 + u*v*t + (u+v)*t^2", UV, 2)
        assert S.coefficient(1) == Polynomial(UV, {(1, 1): 1})
        assert S.coefficient(2) == Polynomial(UV, {(1, 0): 1, (0, 1): 1})

    def test_truncation_drops_high_terms(self):
        S = parse_series("1 + t^9", INTEGERS, 4)
        assert S == Series.one(INTEGERS, 4)

    def test_negative_series_power_rejected(self):
        with pytest.raises(ValueError, match="negative powers"):
            parse_series("1+t^-1", LAURENT_L, 3)

    def test_series_variable_clash(self):
        ring = RingDescriptor(("t",))
        with pytest.raises(ValueError, match="clashes"):
            parse_series("1+t", ring, 2)
