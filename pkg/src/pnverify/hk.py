"""Minimal-degree images of polarized hyperkaehler varieties.

Given an ample, globally generated ``B`` with Beauville square ``q`` the
morphism ``phi_B`` has image in ``P^(h0 - 1)``.  The functions here bound
``deg(phi_B)``, discard the minimal-degree images that cannot occur and
turn what is left into a projective normality verdict for ``B^l``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exactcore import binomial, is_increasing_on_nonneg_integers
from .registry import (
    DeformationType,
    Family,
    HKProfile,
    build_profile,
    fujiki_constant,
    h0,
    hypothesis_check,
    top_intersection,
)
from .vmd import (
    ConeOverScroll,
    ConeOverVeronese,
    EmbeddedVMD,
    ProjectiveSpace,
    Quadric,
    Veronese,
    minimal_degree,
    singular_candidates,
    vertex_codim,
)


class HypothesisFailure(ValueError):
    """The degree bound needs R increasing and R(alpha) > 2n."""


@dataclass(frozen=True)
class PolarizedHK:
    profile: HKProfile
    q: int

    def __post_init__(self) -> None:
        # validates parity and the alpha bound
        value = h0(self.profile, self.q)
        if value < 2 * self.n + 2:
            raise ValueError(f"h0 = {value} < 2n + 2 = {2 * self.n + 2}")

    @classmethod
    def of(cls, family: str | Family, n: int | None, q: int) -> "PolarizedHK":
        return cls(build_profile(DeformationType.of(family, n)), q)

    @property
    def n(self) -> int:
        return self.profile.n

    @property
    def h0(self) -> int:
        return h0(self.profile, self.q)

    @property
    def top(self) -> int:
        return top_intersection(self.profile, self.q)

    @property
    def label(self) -> str:
        return f"{self.profile.deformation_type.label} q={self.q}"


@dataclass(frozen=True)
class Exclusion:
    excluded: bool
    route: str | None
    reason: str

    def __bool__(self) -> bool:
        return self.excluded


@dataclass(frozen=True)
class Candidate:
    image: EmbeddedVMD
    implied_degree: int

    def to_dict(self) -> dict:
        return {
            "image": self.image.token,
            "imageDegree": self.image.degree,
            "impliedDegree": self.implied_degree,
        }


def _require_hypotheses(p: PolarizedHK) -> None:
    check = hypothesis_check(p.profile)
    if not check.increasing:
        raise HypothesisFailure(f"{p.label}: R is not increasing on nonnegative integers")
    if not check.r_at_alpha_gt_2n:
        raise HypothesisFailure(f"{p.label}: R(alpha) = {check.r_at_alpha} <= 2n = {2 * p.n}")
    if p.h0 - 2 * p.n <= 0:
        raise HypothesisFailure(f"{p.label}: h0 - 2n = {p.h0 - 2 * p.n} is not positive")


def degree_upper_bound(p: PolarizedHK) -> int:
    """Largest ``deg(phi_B)`` compatible with ``B^2n >= deg * (h0 - 2n)`` and ``deg < (2n)!``."""
    _require_hypotheses(p)
    sharp = p.top // (p.h0 - 2 * p.n)
    coarse = math.factorial(2 * p.n) - 1
    return min(sharp, coarse)


def cone_over_curve_excluded(p: PolarizedHK) -> Exclusion:
    _require_hypotheses(p)
    n, hv, top = p.n, p.h0, p.top
    if hv >= 4 * n:
        return Exclusion(
            True,
            "h0-at-least-4n",
            f"h0 = {hv} >= 4n = {4 * n}, so (h0 - 2n)^(2n-1) >= (2n)! exceeds every admissible degree",
        )
    alpha = p.profile.alpha_min
    rhs = alpha**n * (hv - 2 * n) ** (2 * n)
    if top < rhs:
        return Exclusion(
            True,
            "top-below-alpha-power",
            f"B^{2 * n} = {top} < alpha^n (h0 - 2n)^(2n) = {rhs}",
        )
    return Exclusion(False, None, f"h0 = {hv} < {4 * n} and B^{2 * n} = {top} >= {rhs}")


def eliminate_images(p: PolarizedHK) -> list[Candidate]:
    """Minimal-degree images of ``X`` that survive every exclusion rule."""
    _require_hypotheses(p)
    n, hv = p.n, p.h0
    curve_cones_out = bool(cone_over_curve_excluded(p))
    survivors: list[Candidate] = []
    # smooth scrolls never occur: a fibration over P^1 would contradict
    # Matsushita (the base of a fibration has dim n)
    for e in singular_candidates(2 * n, hv - 1):
        c = e.cls
        if isinstance(c, ConeOverScroll):
            if vertex_codim(c) != 2 or curve_cones_out:
                continue
        if isinstance(c, Quadric) and hv != 2 * n + 2:
            continue
        if isinstance(c, ConeOverVeronese) and hv != 2 * n + 4:
            continue
        if isinstance(c, (ProjectiveSpace, Veronese)) and e.dim != 2 * n:
            continue
        implied, rem = divmod(p.top, e.degree)
        # degree 1 would make X birational to a rational variety
        if rem or implied <= 1:
            continue
        survivors.append(Candidate(e, implied))
    return survivors


@dataclass(frozen=True)
class ExceptionalCase:
    family: Family
    n: int
    q: int
    image: EmbeddedVMD
    degree: int

    @property
    def kind(self) -> str:
        c = self.image.cls
        if isinstance(c, Quadric):
            return "quadric"
        if isinstance(c, ConeOverVeronese):
            return "cone-veronese"
        if isinstance(c, ConeOverScroll):
            return "cone-scroll"
        return type(c).__name__.lower()

    def to_dict(self) -> dict:
        return {
            "type": self.family.value,
            "n": self.n,
            "q": self.q,
            "image": self.image.token,
            "kind": self.kind,
            "degree": self.degree,
        }


def _n_range(family: Family, n_max: int) -> range:
    fixed = {Family.OG6: 3, Family.OG10: 5}
    if family in fixed:
        n = fixed[family]
        return range(n, n + 1) if n_max >= n else range(0)
    return range(2, n_max + 1)


def solve_rr_equal(p: HKProfile, target: int) -> list[int]:
    """All even ``q >= 2`` with ``RR(q) == target``, by monotone scan."""
    mono = is_increasing_on_nonneg_integers(p.rr)
    if not mono:
        raise HypothesisFailure(f"{p.deformation_type.label}: RR is not increasing, scan would not terminate")
    sols = []
    k = 1
    while True:
        value = p.rr(2 * k)
        if value > target:
            return sols
        if value == target:
            sols.append(2 * k)
        k += 1


def enumerate_exceptional(family: str | Family, n_max: int) -> list[ExceptionalCase]:
    """Polarizations whose ``phi_B`` might still land on a minimal-degree variety.

    Only ``h0 = 2n + 2`` (quadric) and ``h0 = 2n + 4`` (Veronese cone) can
    carry a candidate once cones over curves are ruled out; both are solved
    exactly and every solution is run through :func:`eliminate_images`.
    """
    fam = family if isinstance(family, Family) else Family.parse(family)
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    cases: list[ExceptionalCase] = []
    for n in _n_range(fam, n_max):
        prof = build_profile(DeformationType(fam, n))
        qs = sorted(set(solve_rr_equal(prof, 2 * n + 2) + solve_rr_equal(prof, 2 * n + 4)))
        for q in qs:
            pol = PolarizedHK(prof, q)
            for cand in eliminate_images(pol):
                cases.append(ExceptionalCase(fam, n, q, cand.image, cand.implied_degree))
    return cases


@dataclass(frozen=True)
class HKAnalysis:
    polarized: PolarizedHK
    h0: int
    top: int
    degree_bound: int
    admissible_images: tuple[Candidate, ...]
    pn_guaranteed_from: int
    pn_conditional: dict | None
    assumptions: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        prof = self.polarized.profile
        return {
            "type": prof.deformation_type.family.value,
            "n": prof.n,
            "q": self.polarized.q,
            "h0": self.h0,
            "top": self.top,
            "degreeBound": self.degree_bound,
            "admissibleImages": [c.to_dict() for c in self.admissible_images],
            "pnGuaranteedFrom": self.pn_guaranteed_from,
            "conditionalCases": [self.pn_conditional] if self.pn_conditional else [],
            "assumptions": list(self.assumptions),
        }


def theorem_b_verdict(p: PolarizedHK) -> HKAnalysis:
    """Projective normality of ``B^l``: always for ``l >= 2n``, and for
    ``l = 2n - 1`` unless ``phi_B`` may map onto one of the surviving images."""
    n = p.n
    images = tuple(eliminate_images(p))
    bound = degree_upper_bound(p)
    assumptions = list(p.profile.assumptions) + [
        "B is ample and globally generated",
        "smooth scrolls are excluded by Matsushita's fibration theorem (taken as an axiom)",
        "images of degree 1 are excluded: X cannot be birational to a rational variety",
    ]
    conditional = None
    if images:
        conditional = {
            "l": 2 * n - 1,
            "status": "conditional",
            "images": [c.to_dict() for c in images],
            "note": (
                f"B^{2 * n - 1} is projectively normal unless phi_B maps X onto "
                + " or ".join(c.image.token for c in images)
                + "; not being projectively normal is not asserted"
            ),
        }
    return HKAnalysis(
        polarized=p,
        h0=p.h0,
        top=p.top,
        degree_bound=bound,
        admissible_images=images,
        pn_guaranteed_from=2 * n if images else 2 * n - 1,
        pn_conditional=conditional,
        assumptions=tuple(assumptions),
    )


@dataclass(frozen=True)
class SecantBound:
    deg_bound: int
    max_length: int
    witness: tuple[int, int]

    def to_dict(self) -> dict:
        k, value = self.witness
        return {
            "degBound": self.deg_bound,
            "maxLength": self.max_length,
            "witness": {"k": k, "binomial": value, "exceeds": value > self.deg_bound},
        }


def secant_length_bound() -> SecantBound:
    """Secant lines of a K3 surface via the degree bound on ``S[2]``."""
    deg_bound = math.factorial(4) - 1
    k = 2
    while binomial(k + 1, 2) <= deg_bound:
        k += 1
    return SecantBound(deg_bound, k, (k + 1, binomial(k + 1, 2)))


@dataclass(frozen=True)
class GrassmannianExample:
    """The 6:1 map ``S[2] -> Gr(2, 4)`` for a general quartic K3 surface."""

    forced_q: int
    q_solutions: tuple[int, ...]
    target_quadric_degree: int
    map_degree: int
    h0: int
    ambient: int
    consistent: bool

    def to_dict(self) -> dict:
        return {
            "forcedQ": self.forced_q,
            "qSolutions": list(self.q_solutions),
            "quadricDegree": self.target_quadric_degree,
            "mapDegree": self.map_degree,
            "h0": self.h0,
            "ambient": f"P{self.ambient}",
            "consistent": self.consistent,
        }


def grassmannian_example_check() -> GrassmannianExample:
    map_degree = binomial(4, 2)
    quad = minimal_degree(4, 5)
    fujiki = fujiki_constant(DeformationType(Family.K3N, 2))
    target = map_degree * quad
    sols = []
    q = 2
    while fujiki * q**2 <= target:
        if fujiki * q**2 == target:
            sols.append(q)
        q += 2
    prof = build_profile(DeformationType(Family.K3N, 2))
    forced = sols[0] if len(sols) == 1 else 0
    sections = h0(prof, forced) if forced else 0
    return GrassmannianExample(
        forced_q=forced,
        q_solutions=tuple(sols),
        target_quadric_degree=quad,
        map_degree=map_degree,
        h0=sections,
        ambient=sections - 1,
        consistent=len(sols) == 1 and sections == 6,
    )


def r_alpha_lower_bound(p: HKProfile) -> tuple[Fraction, bool]:
    """``RR(2) - fujiki * 2^n / (2n)!``, the lower bound for ``R(alpha)``."""
    n = p.n
    value = p.rr(2) - p.fujiki * 2**n / math.factorial(2 * n)
    return value, value > 2 * n


__all__ = [
    "HypothesisFailure",
    "PolarizedHK",
    "Exclusion",
    "Candidate",
    "degree_upper_bound",
    "cone_over_curve_excluded",
    "eliminate_images",
    "ExceptionalCase",
    "solve_rr_equal",
    "enumerate_exceptional",
    "HKAnalysis",
    "theorem_b_verdict",
    "SecantBound",
    "secant_length_bound",
    "GrassmannianExample",
    "grassmannian_example_check",
    "r_alpha_lower_bound",
]
