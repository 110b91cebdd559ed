"""Known hyperkaehler deformation types and their Riemann-Roch data.

For a line bundle ``L`` with Beauville square ``x = q(L)`` on a variety of
dimension ``2n``:

* ``K3[n]`` type: ``chi(L) = binom(x/2 + n + 1, n)``, ``c = (2n)!/(n! 2^n)``
* generalised Kummer ``K^n(T)``: ``chi(L) = (n+1) binom(x/2 + n, n)``,
  ``c = (n+1)(2n)!/(n! 2^n)``
* O'Grady's sixfold shares the Kummer ``n = 3`` data.

O'Grady's tenfold can be named but is rejected everywhere, since its
Riemann-Roch coefficients are not known.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exactcore import (
    Monotonicity,
    UniPoly,
    coefficient_text,
    expand_half_binomial,
    format_rational,
    is_increasing_on_nonneg_integers,
    poly_eval,
)

ALPHA_MIN = 2

H0_EQUALS_CHI = (
    "h0(B) = chi(B): an ample line bundle on a K-trivial variety has no higher "
    "cohomology (Kodaira vanishing)"
)
ALPHA_BOUND_NOTE = (
    "the minimal Beauville square of an ample class is replaced by its lower "
    "bound 2; hypothesis checks use the bound together with monotonicity"
)


class InvariantError(RuntimeError):
    """An internal consistency identity failed while building a profile."""


class UnsupportedTypeError(ValueError):
    pass


class Family(str, enum.Enum):
    K3N = "k3n"
    KUMMER = "kummer"
    OG6 = "og6"
    OG10 = "og10"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().lower()
        aliases = {"m10": "og10", "m6": "og6", "k3": "k3n", "kum": "kummer"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            choices = ", ".join(f.value for f in cls)
            raise UnsupportedTypeError(f"unknown deformation type {text!r} (choose from {choices})") from None


@dataclass(frozen=True)
class DeformationType:
    family: Family
    n: int

    def __post_init__(self) -> None:
        family = self.family if isinstance(self.family, Family) else Family.parse(self.family)
        object.__setattr__(self, "family", family)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if family is Family.OG6 and self.n != 3:
            raise ValueError(f"og6 has dimension 6, so n must be 3 (got n={self.n})")
        if family is Family.OG10 and self.n != 5:
            raise ValueError(f"og10 has dimension 10, so n must be 5 (got n={self.n})")

    @classmethod
    def of(cls, family: str | Family, n: int | None = None) -> "DeformationType":
        fam = family if isinstance(family, Family) else Family.parse(family)
        if n is None:
            fixed = {Family.OG6: 3, Family.OG10: 5}
            if fam not in fixed:
                raise ValueError(f"{fam.value} needs an explicit n")
            n = fixed[fam]
        return cls(fam, n)

    @property
    def dim(self) -> int:
        return 2 * self.n

    @property
    def label(self) -> str:
        if self.family is Family.K3N:
            return f"K3[{self.n}]"
        if self.family is Family.KUMMER:
            return f"K^{self.n}(T)"
        return {Family.OG6: "OG6", Family.OG10: "OG10"}[self.family]


def _supported(t: DeformationType) -> None:
    if t.family is Family.OG10:
        raise UnsupportedTypeError("og10: Riemann-Roch coefficients unknown")


def _kummer_like(t: DeformationType) -> bool:
    return t.family in (Family.KUMMER, Family.OG6)


def fujiki_constant(t: DeformationType) -> Fraction:
    _supported(t)
    n = t.n
    base = Fraction(math.factorial(2 * n), math.factorial(n) * 2**n)
    return (n + 1) * base if _kummer_like(t) else base


def rr_polynomial(t: DeformationType) -> UniPoly:
    """Euler characteristic as a polynomial in the Beauville square."""
    _supported(t)
    n = t.n
    if _kummer_like(t):
        return expand_half_binomial(n, n, n + 1)
    return expand_half_binomial(n + 1, n, 1)


@dataclass(frozen=True)
class HKProfile:
    deformation_type: DeformationType
    dim: int
    fujiki: Fraction
    rr: UniPoly
    r_poly: UniPoly
    alpha_min: int = ALPHA_MIN
    assumptions: tuple[str, ...] = field(default=(H0_EQUALS_CHI, ALPHA_BOUND_NOTE))

    @property
    def n(self) -> int:
        return self.deformation_type.n

    def canonical_text(self) -> str:
        t = self.deformation_type
        return (
            f"{t.family.value} n={t.n} fujiki={format_rational(self.fujiki)} "
            f"rr={coefficient_text(self.rr.coeffs)}"
        )

    def to_dict(self) -> dict:
        t = self.deformation_type
        return {
            "type": t.family.value,
            "n": t.n,
            "dim": self.dim,
            "fujiki": format_rational(self.fujiki),
            "rr": [format_rational(c) for c in self.rr.coeffs],
            "rPoly": [format_rational(c) for c in self.r_poly.coeffs],
            "alphaMin": self.alpha_min,
            "canonical": self.canonical_text(),
        }


@functools.lru_cache(maxsize=512)
def build_profile(t: DeformationType) -> HKProfile:
    n = t.n
    fujiki = fujiki_constant(t)
    rr = rr_polynomial(t)
    if rr.degree != n:
        raise InvariantError(f"{t.label}: deg RR = {rr.degree}, expected n = {n}")
    expected_lead = fujiki / math.factorial(2 * n)
    if rr.leading != expected_lead:
        raise InvariantError(
            f"{t.label}: leading RR coefficient {rr.leading} != fujiki/(2n)! = {expected_lead}"
        )
    if rr(0) != n + 1:
        raise InvariantError(f"{t.label}: RR(0) = {rr(0)} != chi(O_X) = n+1 = {n + 1}")
    return HKProfile(
        deformation_type=t,
        dim=2 * n,
        fujiki=fujiki,
        rr=rr,
        r_poly=rr.drop_term(n),
    )


def profile(family: str | Family, n: int | None = None) -> HKProfile:
    return build_profile(DeformationType.of(family, n))


def _check_square(p: HKProfile, q: int) -> None:
    if not isinstance(q, int) or isinstance(q, bool):
        raise TypeError(f"Beauville square must be an integer, got {q!r}")
    if q <= 0 or q % 2:
        raise ValueError(f"Beauville square must be a positive even integer, got q={q}")
    if q < p.alpha_min:
        raise ValueError(f"q={q} is below the ample bound alpha_min={p.alpha_min}")


def h0(p: HKProfile, q: int) -> int:
    """Sections of an ample class with Beauville square ``q``."""
    _check_square(p, q)
    value = poly_eval(p.rr, q)
    if value.denominator != 1:
        raise InvariantError(f"{p.deformation_type.label}: RR({q}) = {value} is not an integer")
    return int(value)


def top_intersection(p: HKProfile, q: int) -> int:
    """Top self-intersection ``fujiki * q^n``."""
    _check_square(p, q)
    value = p.fujiki * q**p.n
    if value.denominator != 1:
        raise InvariantError(f"{p.deformation_type.label}: B^2n = {value} is not an integer")
    return int(value)


@dataclass(frozen=True)
class HypothesisCheck:
    increasing: Monotonicity
    r_at_alpha: Fraction
    rr_at_alpha: Fraction
    r_at_alpha_gt_2n: bool
    rr_at_alpha_ge_4n: bool

    @property
    def degree_bound_applies(self) -> bool:
        """Both hypotheses needed for the ``deg < (2n)!`` bound hold."""
        return bool(self.increasing) and self.r_at_alpha_gt_2n

    def to_dict(self) -> dict:
        return {
            "increasing": self.increasing.increasing,
            "increasingCertificate": self.increasing.certificate,
            "rAtAlpha": format_rational(self.r_at_alpha),
            "rrAtAlpha": format_rational(self.rr_at_alpha),
            "rAtAlphaGt2n": self.r_at_alpha_gt_2n,
            "rrAtAlphaGe4n": self.rr_at_alpha_ge_4n,
        }


def hypothesis_check(p: HKProfile) -> HypothesisCheck:
    n = p.n
    r_val = poly_eval(p.r_poly, p.alpha_min)
    rr_val = poly_eval(p.rr, p.alpha_min)
    return HypothesisCheck(
        increasing=is_increasing_on_nonneg_integers(p.r_poly),
        r_at_alpha=r_val,
        rr_at_alpha=rr_val,
        r_at_alpha_gt_2n=r_val > 2 * n,
        rr_at_alpha_ge_4n=rr_val >= 4 * n,
    )
