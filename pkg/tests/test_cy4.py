import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pnverify.cy4 import (
    CY4Numerics,
    chi_multiple,
    classify_image_cy4,
    degree_bound_thm23,
    h0_difference,
    multiplication_chain,
    scroll_positivity,
    singular_cone_r_range,
    theorem_a_trace,
)

numerics = st.builds(
    CY4Numerics,
    st.integers(1, 500),
    st.fractions(min_value=0, max_value=500, max_denominator=24),
)


class TestRiemannRoch:
    def test_five_a_minimum(self):
        assert chi_multiple(5, CY4Numerics(1)) == Fraction(673, 24)

    def test_difference_n5(self):
        assert h0_difference(5, CY4Numerics(1)).value == Fraction(123, 8)

    def test_difference_at_least_5(self):
        for n in range(5, 51):
            assert h0_difference(n, CY4Numerics(1, Fraction(0))).at_least_5

    def test_difference_below_5_at_n3(self):
        d = h0_difference(3, CY4Numerics(1))
        assert d.value == Fraction(65, 24) and not d.at_least_5

    @given(numerics, st.integers(2, 50))
    def test_telescoping(self, v, n):
        assert chi_multiple(n, v) - chi_multiple(n - 1, v) == h0_difference(n, v).value

    @given(numerics, st.integers(5, 50))
    def test_extremal_numerics_minimise_difference(self, v, n):
        assert h0_difference(n, v).value >= h0_difference(n, CY4Numerics(1)).value

    def test_miyaoka_enforced(self):
        with pytest.raises(ValueError):
            CY4Numerics(1, Fraction(-1))
        with pytest.raises(ValueError):
            CY4Numerics(0)


class TestDegreeBounds:
    def test_r27(self):
        assert degree_bound_thm23(27) == 26

    def test_small_r_rejected(self):
        with pytest.raises(ValueError):
            degree_bound_thm23(3)

    def test_monotone(self):
        bounds = [degree_bound_thm23(r) for r in range(4, 501)]
        assert all(a >= b for a, b in zip(bounds, bounds[1:]))
        assert bounds[-1] == 24

    @given(st.integers(4, 10**6))
    def test_bound_is_floor(self, r):
        d = degree_bound_thm23(r)
        assert d * (r - 3) <= 24 * (r - 1) < (d + 1) * (r - 3)

    def test_singular_cone_range(self):
        brute = [r for r in range(6, 1001) if (r - 3) ** 3 <= 24 * (r - 1)]
        assert singular_cone_r_range() == brute == [6, 7, 8]


class TestScrollPositivity:
    def test_examples(self):
        assert scroll_positivity((1, 1, 1, 1)).value == 0
        assert scroll_positivity((1, 1, 1, 2)).big_and_nef

    def test_threshold(self):
        for a in itertools.combinations_with_replacement(range(1, 28), 4):
            if sum(a) > 30:
                continue
            sp = scroll_positivity(a)
            assert sp.big_and_nef == (sum(a) >= 5) == (sp.r >= 8)

    def test_needs_four_entries(self):
        with pytest.raises(ValueError):
            scroll_positivity((1, 2, 3))


class TestClassify:
    def test_r9_fibre_interval(self):
        rep = classify_image_cy4(9)
        assert [(i.lo, i.hi) for c in rep.cases for i in c.intervals] == [(2, 18)]

    def test_r4(self):
        assert classify_image_cy4(4).labels() == ["a1"]

    def test_r5(self):
        assert classify_image_cy4(5).labels() == ["a2", "b1"]

    def test_r7_has_both_cones(self):
        rep = classify_image_cy4(7, h0G=4)
        images = [c.image for c in rep.cases]
        assert "double cone over Veronese surface@P7" in images
        assert "triple cone over rational normal curve@P7" in images

    def test_r6_needs_fibre_sections(self):
        with pytest.raises(ValueError):
            classify_image_cy4(6)

    def test_regular_fibre_parity(self):
        rep = classify_image_cy4(6, h0G=5, regular_fibre=True)
        a3 = rep.cases[0]
        assert [(i.lo, i.hi, i.parity) for i in a3.intervals] == [(4, 24, "even"), (5, 24, "odd")]

    @given(st.integers(4, 300))
    def test_intervals_within_global_bound(self, r):
        rep = classify_image_cy4(r, h0G=3)
        for c in rep.cases:
            for i in c.intervals:
                assert 2 <= i.lo and i.hi <= rep.global_degree_bound


class TestEffectiveTrace:
    def test_regular(self):
        t = theorem_a_trace(True)
        assert t.verified
        assert t.step("i").lhs == "673/24" and t.step("i").rhs == "28"
        assert t.step("ii").rhs == "26"
        assert t.step("iii").rhs == "125"
        assert t.pn_from == 15
        assert t.conclusion.endswith("15A projectively normal")

    def test_general(self):
        t = theorem_a_trace(False)
        assert t.verified and t.pn_from == 16

    def test_chain_threshold(self):
        for n in range(1, 16):
            assert multiplication_chain(n) is None
        for n in range(16, 120):
            chain = multiplication_chain(n)
            assert chain is not None and sum(chain) == n
            m = n
            for s in chain:
                assert s >= 5 and m >= 3 * s + 1
                m += s
