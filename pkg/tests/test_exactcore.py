import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pnverify.exactcore import (
    UniPoly,
    as_rational,
    binomial,
    expand_half_binomial,
    format_rational,
    is_increasing_on_nonneg_integers,
    parse_rational,
    poly_eval,
    rat_ceil,
    rat_compare,
    rat_div,
    rat_floor,
)

fractions = st.fractions(max_denominator=10**6).filter(lambda f: abs(f.numerator) < 10**12)


def direct_half_binomial(q: int, shift: int, k: int) -> Fraction:
    # q even, so q/2 + shift is an integer and math.comb applies when it is >= 0
    top = q // 2 + shift
    return Fraction(binomial(top, k))


class TestScalars:
    def test_floats_and_bools_rejected(self):
        with pytest.raises(TypeError):
            as_rational(0.5)
        with pytest.raises(TypeError):
            as_rational(True)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            rat_div(1, 0)

    def test_floor_ceil_negative(self):
        assert rat_floor(Fraction(-7, 2)) == -4
        assert rat_ceil(Fraction(-7, 2)) == -3
        assert rat_floor(Fraction(673, 24)) == 28
        assert rat_ceil(Fraction(673, 24)) == 29

    def test_compare(self):
        assert rat_compare(Fraction(1, 3), Fraction(1, 2)) == -1
        assert rat_compare(2, Fraction(4, 2)) == 0
        assert rat_compare(Fraction(15, 2), Fraction(17, 2)) == -1

    def test_integers_keep_denominator(self):
        assert format_rational(3) == "3/1"
        assert format_rational(Fraction(-6, 4)) == "-3/2"

    @given(fractions)
    def test_format_round_trip(self, x):
        text = format_rational(x)
        assert parse_rational(text) == x
        p, q = map(int, text.split("/"))
        assert q > 0 and math.gcd(p, q) == 1

    @given(fractions, fractions)
    def test_compare_matches_difference_sign(self, a, b):
        d = a - b
        assert rat_compare(a, b) == (d > 0) - (d < 0)


class TestBinomial:
    def test_values(self):
        assert binomial(8, 2) == 28
        assert binomial(4, 2) == 6
        assert binomial(-1, 3) == -1
        assert binomial(3, 5) == 0

    def test_negative_k(self):
        with pytest.raises(ValueError):
            binomial(4, -1)

    @given(st.integers(-30, 30), st.integers(0, 12))
    def test_pascal(self, m, k):
        if k >= 1:
            assert binomial(m + 1, k) == binomial(m, k) + binomial(m, k - 1)
        else:
            assert binomial(m, 0) == 1


class TestUniPoly:
    def test_trailing_zeros_stripped(self):
        assert UniPoly.from_coeffs([1, 2, 0, 0]).coeffs == (1, 2)
        assert UniPoly.from_coeffs([0]).degree == -1

    def test_k3n2_expansion(self):
        assert expand_half_binomial(3, 2).coeffs == (3, Fraction(5, 4), Fraction(1, 8))

    def test_kummer2_expansion(self):
        p = expand_half_binomial(2, 2, 3)
        assert p.coeffs == (3, Fraction(9, 4), Fraction(3, 8))
        assert p(2) == 9

    def test_drop_term(self):
        p = UniPoly.from_coeffs([3, 5, 7])
        assert p.drop_term(2).coeffs == (3, 5)
        assert p.drop_term(0).coeffs == (0, 5, 7)

    def test_shift(self):
        p = UniPoly.from_coeffs([0, 0, 1])
        assert p.shift(1).coeffs == (1, 2, 1)

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            expand_half_binomial(3, 0)

    @given(st.integers(0, 100).map(lambda h: 2 * h), st.integers(1, 20), st.integers(-3, 25))
    def test_half_binomial_oracle(self, q, k, shift):
        # oracle: math.comb evaluated at q/2 + shift
        assert poly_eval(expand_half_binomial(shift, k), q) == direct_half_binomial(q, shift, k)

    @given(st.lists(fractions, max_size=6), st.lists(fractions, max_size=6), fractions)
    def test_ring_operations_commute_with_eval(self, a, b, x):
        p, r = UniPoly.from_coeffs(a), UniPoly.from_coeffs(b)
        assert (p + r)(x) == p(x) + r(x)
        assert (p - r)(x) == p(x) - r(x)
        assert (p * r)(x) == p(x) * r(x)

    @given(st.lists(fractions, max_size=6), fractions)
    def test_horner_matches_power_sum(self, a, x):
        p = UniPoly.from_coeffs(a)
        assert poly_eval(p, x) == sum((c * x**i for i, c in enumerate(p.coeffs)), Fraction(0))


class TestMonotonicity:
    def test_nonnegative_coefficients(self):
        m = is_increasing_on_nonneg_integers(UniPoly.from_coeffs([1, 0, 2]))
        assert m.increasing and m.certificate == "all-coefficients-nonnegative"

    def test_constant(self):
        assert is_increasing_on_nonneg_integers(UniPoly.constant(5)).certificate == "constant"

    def test_dip_detected(self):
        # x^2 - 3x decreases from 0 to 1
        m = is_increasing_on_nonneg_integers(UniPoly.from_coeffs([0, -3, 1]))
        assert not m.increasing and m.witness == 0

    def test_eventually_decreasing(self):
        m = is_increasing_on_nonneg_integers(UniPoly.from_coeffs([0, 100, -1]))
        assert not m.increasing

    def test_scan_certificate(self):
        m = is_increasing_on_nonneg_integers(UniPoly.from_coeffs([0, -1, 1]))
        assert m.increasing and m.certificate == "scanned-to-bound"

    @settings(max_examples=300)
    @given(st.lists(st.integers(-20, 20), min_size=1, max_size=5))
    def test_against_brute_scan(self, coeffs):
        p = UniPoly.from_coeffs(coeffs)
        m = is_increasing_on_nonneg_integers(p)
        # the forward difference has integer coefficients below 20 * 2^5 and
        # integer leading term, so all its real roots lie below 640
        brute = all(p(k + 1) >= p(k) for k in range(700))
        assert m.increasing == brute
