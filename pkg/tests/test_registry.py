import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from pnverify.registry import (
    ALPHA_MIN,
    DeformationType,
    Family,
    UnsupportedTypeError,
    build_profile,
    fujiki_constant,
    h0,
    hypothesis_check,
    profile,
    top_intersection,
)


families = st.sampled_from([Family.K3N, Family.KUMMER])
even_q = st.integers(1, 50).map(lambda k: 2 * k)


class TestFujiki:
    @pytest.mark.parametrize(
        "family,n,value",
        [(Family.K3N, 2, 3), (Family.K3N, 3, 15), (Family.KUMMER, 2, 9), (Family.OG6, 3, 60)],
    )
    def test_known_values(self, family, n, value):
        assert fujiki_constant(DeformationType(family, n)) == value

    @given(families, st.integers(1, 40))
    def test_double_factorial_oracle(self, family, n):
        assert fujiki_constant(DeformationType(family, n)) == oracles.fujiki(family, n)


class TestRiemannRoch:
    def test_ambient_spaces(self):
        assert h0(profile("k3n", 2), 2) == 6
        assert h0(profile("k3n", 3), 2) == 10
        assert h0(profile("kummer", 2), 2) == 9

    def test_og6_matches_kummer3(self):
        a, b = profile("og6"), profile("kummer", 3)
        assert a.rr == b.rr and a.fujiki == b.fujiki

    @given(families, st.integers(2, 20), even_q)
    def test_polynomial_against_binomial(self, family, n, q):
        assert h0(build_profile(DeformationType(family, n)), q) == oracles.sections(family, n, q)

    @given(families, st.integers(1, 50))
    def test_profile_identities(self, family, n):
        p = build_profile(DeformationType(family, n))
        assert p.rr.degree == n
        assert p.rr.leading * math.factorial(2 * n) == p.fujiki
        assert p.rr(0) == n + 1
        assert p.r_poly.degree < n

    @given(families, st.integers(1, 12), even_q)
    def test_top_intersection(self, family, n, q):
        p = build_profile(DeformationType(family, n))
        assert top_intersection(p, q) == oracles.fujiki(family, n) * q**n


class TestInputValidation:
    def test_og10_rejected(self):
        with pytest.raises(UnsupportedTypeError, match="Riemann-Roch coefficients unknown"):
            profile("og10")

    def test_og6_dimension(self):
        with pytest.raises(ValueError):
            DeformationType(Family.OG6, 2)

    def test_unknown_family(self):
        with pytest.raises(UnsupportedTypeError):
            Family.parse("enriques")

    @pytest.mark.parametrize("q", [0, 3, -2])
    def test_bad_squares(self, q):
        with pytest.raises(ValueError):
            h0(profile("k3n", 2), q)

    def test_float_square(self):
        with pytest.raises(TypeError):
            h0(profile("k3n", 2), 2.0)


class TestCanonicalText:
    def test_k3n2(self):
        assert profile("k3n", 2).canonical_text() == "k3n n=2 fujiki=3/1 rr=[3/1,5/4,1/8]"

    def test_dict_uses_fraction_strings(self):
        d = profile("kummer", 2).to_dict()
        assert d["fujiki"] == "9/1"
        assert d["rr"] == ["3/1", "9/4", "3/8"]


class TestHypotheses:
    def test_alpha(self):
        assert ALPHA_MIN == 2

    @pytest.mark.parametrize("family", [Family.K3N, Family.KUMMER])
    def test_all_n(self, family):
        for n in range(2, 51):
            chk = hypothesis_check(build_profile(DeformationType(family, n)))
            assert chk.increasing and chk.r_at_alpha_gt_2n

    def test_og6(self):
        chk = hypothesis_check(profile("og6"))
        assert chk.degree_bound_applies
        assert chk.r_at_alpha == 16 - Fraction(60 * 8, 720)
