"""Riemann-Roch arithmetic on fourfolds with trivial canonical bundle.

On such a fourfold (regular, so ``chi(O_X) = 2``) Riemann-Roch for an
ample class reads ``h0(B) = B^4/24 + B^2.c2/24 + 2`` and Miyaoka gives
``B^2.c2 >= 0``.  Everything below is exact arithmetic on top of that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactcore import as_rational, format_rational, rat_ceil, rat_floor
from .vmd import scroll_degree

# Gallego-Purnaprajna bound for threefold fibres mapping onto P^3
FIBRE_DEGREE_MAX = 18
# Kawamata: sA is base point free for s >= 5
BPF_MULTIPLE = 5


@dataclass(frozen=True)
class CY4Numerics:
    A4: int
    A2c2: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if not isinstance(self.A4, int) or self.A4 < 1:
            raise ValueError(f"A^4 must be a positive integer, got {self.A4!r}")
        c = as_rational(self.A2c2)
        if c < 0:
            raise ValueError(f"A^2.c2 must be >= 0 (Miyaoka), got {c}")
        object.__setattr__(self, "A2c2", c)

    @property
    def chi_is_integral(self) -> bool:
        return chi_multiple(1, self).denominator == 1


def chi_multiple(n: int, v: CY4Numerics) -> Fraction:
    if n < 1:
        raise ValueError(f"multiple must be >= 1, got {n}")
    return Fraction(n**4 * v.A4, 24) + Fraction(n**2) * v.A2c2 / 24 + 2


@dataclass(frozen=True)
class Difference:
    value: Fraction
    at_least_5: bool


def h0_difference(n: int, v: CY4Numerics) -> Difference:
    """``h0(nA) - h0((n-1)A)``; the surjectivity lemma needs it ``>= 5``."""
    if n < 2:
        raise ValueError(f"difference needs n >= 2, got {n}")
    value = Fraction(n**4 - (n - 1) ** 4, 24) * v.A4 + Fraction(n**2 - (n - 1) ** 2, 24) * v.A2c2
    return Difference(value, value >= 5)


def degree_bound_thm23(r: int) -> int:
    """Maximal ``deg(phi_B)`` when ``h0(B) = r + 1`` and the image has minimal degree."""
    if r <= 3:
        raise ValueError(f"degree bound needs r >= 4, got r={r}")
    return rat_floor(Fraction(24 * (r - 1), r - 3))


def singular_cone_r_range() -> list[int]:
    """All ``r >= 6`` with ``(r-3)^3 <= 24(r-1)``.

    ``(r-3)^3 - 24(r-1)`` has derivative ``3(r-3)^2 - 24 > 0`` for ``r >= 6``,
    so the scan may stop at the first failure.
    """
    out = []
    r = 6
    while (r - 3) ** 3 <= 24 * (r - 1):
        out.append(r)
        r += 1
    return out


@dataclass(frozen=True)
class ScrollPositivity:
    a: tuple[int, ...]
    value: int
    r: int
    big_and_nef: bool


def scroll_positivity(a: tuple[int, ...] | list[int]) -> ScrollPositivity:
    """``(H - R)^4`` on the fourfold scroll ``S(a)`` with ``H^3 R = 1``."""
    a = tuple(a)
    if len(a) != 4:
        raise ValueError(f"fourfold scroll needs 4 integers, got {a}")
    total = scroll_degree(a)
    value = total - 4
    return ScrollPositivity(a, value, total + 3, value > 0)


@dataclass(frozen=True)
class DegreeInterval:
    lo: int
    hi: int
    parity: str = "any"

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "parity": self.parity}

    def __contains__(self, d: int) -> bool:
        if self.parity == "even" and d % 2:
            return False
        if self.parity == "odd" and d % 2 == 0:
            return False
        return self.lo <= d <= self.hi


@dataclass(frozen=True)
class Case:
    label: str
    image: str
    intervals: tuple[DegreeInterval, ...]
    side_conditions: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "image": self.image,
            "intervals": [i.to_dict() for i in self.intervals],
            "sideConditions": list(self.side_conditions),
        }


@dataclass(frozen=True)
class CY4CaseReport:
    r: int
    global_degree_bound: int
    cases: tuple[Case, ...]

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "h0": self.r + 1,
            "globalDegreeBound": self.global_degree_bound,
            "cases": [c.to_dict() for c in self.cases],
        }

    def labels(self) -> list[str]:
        return [c.label for c in self.cases]


def classify_image_cy4(r: int, h0G: int | None = None, regular_fibre: bool = False) -> CY4CaseReport:
    """Possible minimal-degree images of a regular K-trivial fourfold in ``P^r``.

    Case labels ``a1``..``a4`` are the smooth images, ``b1``/``b2`` the
    singular ones.  ``h0G`` is ``h0(B|_G)`` on a general fibre and is needed
    for the scrolls in ``P^6`` and ``P^7``.
    """
    bound = degree_bound_thm23(r)
    full = DegreeInterval(2, bound)
    cases: list[Case] = []
    if r == 4:
        cases.append(Case("a1", "P4", (full,)))
    elif r == 5:
        cases.append(Case("a2", "smooth quadric@P5", (full,)))
        cases.append(Case("b1", "singular quadric@P5", (full,)))
    elif r in (6, 7):
        if h0G is None:
            raise ValueError(f"r={r} needs h0G, the section count on a general fibre")
        if h0G < 1:
            raise ValueError(f"h0G must be positive, got {h0G}")
        fibre = "general fibre G: smooth threefold with K_G = 0, X fibred over P^1"
        if regular_fibre:
            hi = min(6 * (h0G - 1), bound)
            intervals = (
                DegreeInterval(max(2, 2 * h0G - 6), hi, "even"),
                DegreeInterval(max(2, 2 * h0G - 5), hi, "odd"),
            )
            conds = (fibre, "G regular, hence Calabi-Yau")
        else:
            intervals = (DegreeInterval(2, min(6 * h0G, bound)),)
            conds = (fibre,)
        cases.append(Case("a3", f"smooth scroll@P{r}", intervals, conds))
    else:
        hi = min(FIBRE_DEGREE_MAX, bound)
        cases.append(
            Case(
                "a4",
                f"smooth scroll@P{r}",
                (DegreeInterval(2, hi),),
                ("H - R big and nef, so h0(B|_G) = 4 and G maps onto P^3",),
            )
        )
    if r in singular_cone_r_range():
        cases.append(
            Case(
                "b2",
                f"triple cone over rational normal curve@P{r}",
                (full,),
                ("(r-3)^3 <= 24(r-1)",),
            )
        )
    if r == 7:
        cases.append(Case("b2", "double cone over Veronese surface@P7", (full,)))
    return CY4CaseReport(r, bound, tuple(cases))


@dataclass(frozen=True)
class TraceStep:
    label: str
    statement: str
    lhs: str
    relation: str
    rhs: str
    holds: bool
    rule: str = ""

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "statement": self.statement,
            "lhs": self.lhs,
            "relation": self.relation,
            "rhs": self.rhs,
            "holds": self.holds,
            "rule": self.rule,
        }


@dataclass(frozen=True)
class TheoremATrace:
    regular: bool
    steps: tuple[TraceStep, ...]
    pn_from: int
    conclusion: str
    notes: tuple[str, ...] = field(default=())

    @property
    def verified(self) -> bool:
        return all(s.holds for s in self.steps)

    def step(self, label: str) -> TraceStep:
        for s in self.steps:
            if s.label == label:
                return s
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {
            "regular": self.regular,
            "steps": [s.to_dict() for s in self.steps],
            "pnFrom": self.pn_from,
            "verified": self.verified,
            "conclusion": self.conclusion,
            "notes": list(self.notes),
        }


def _surjective_step(m: int, s: int) -> str | None:
    """Rule making ``H0(mA) x H0(sA) -> H0((m+s)A)`` onto, if any."""
    if s < BPF_MULTIPLE:
        return None
    if m >= 3 * s + 1:
        return "koszul-lemma"
    return None


def multiplication_chain(n: int) -> tuple[int, ...] | None:
    """Summands ``s_1, ..., s_j`` of ``n`` whose successive multiplication
    maps starting at ``H0(nA)`` are all onto, or ``None``.

    Each step needs ``s_i >= 5`` and current multiple ``m >= 3 s_i + 1``.
    Since the conditions only get easier as ``m`` grows, the chain also
    handles ``H0(knA) x H0(nA)`` for every ``k >= 1``.
    """

    def rec(m: int, left: int) -> tuple[int, ...] | None:
        if left == 0:
            return ()
        for s in range(BPF_MULTIPLE, left + 1):
            if left - s and left - s < BPF_MULTIPLE:
                continue
            if _surjective_step(m, s):
                rest = rec(m + s, left - s)
                if rest is not None:
                    return (s,) + rest
        return None

    return rec(n, n)


def _regular_trace() -> TheoremATrace:
    steps: list[TraceStep] = []
    mult = BPF_MULTIPLE
    extremal = CY4Numerics(1, Fraction(0))
    h0_min = chi_multiple(mult, extremal)
    # only the floor is used downstream; integrality would give the ceiling
    h0_floor = rat_floor(h0_min)
    steps.append(
        TraceStep(
            "i",
            "h0(5A) over A^4 >= 1, A^2.c2 >= 0 is minimised at (1, 0)",
            format_rational(h0_min),
            ">=",
            str(h0_floor),
            h0_min >= h0_floor,
            "riemann-roch + miyaoka",
        )
    )
    r_min = h0_floor - 1
    codim = r_min - 4
    steps.append(
        TraceStep(
            "i-codim",
            f"r >= {r_min}, so the image has codimension >= {codim}; quadrics (r=5), "
            "Veronese cones (r=7) and cones over curves (6<=r<=8) are impossible",
            str(r_min),
            ">",
            str(max(singular_cone_r_range() + [5, 7])),
            r_min > max(singular_cone_r_range() + [5, 7]),
            "minimal-degree case list",
        )
    )
    bound = degree_bound_thm23(r_min)
    steps.append(
        TraceStep(
            "ii",
            f"deg(phi_B) <= floor(24(r-1)/(r-3)) at r = {r_min}",
            "d",
            "<=",
            str(bound),
            bound >= 2,
            "degree bound",
        )
    )
    # 24(r-1)/(r-3) = 24 + 48/(r-3) decreases in r
    decreasing = all(degree_bound_thm23(r + 1) <= degree_bound_thm23(r) for r in range(r_min, r_min + 200))
    steps.append(
        TraceStep(
            "ii-monotone",
            "the bound is nonincreasing for r >= 27",
            "24 + 48/(r-3)",
            "nonincreasing",
            f"checked r in [{r_min}, {r_min + 200}]",
            decreasing,
            "degree bound",
        )
    )
    forced = mult**3
    steps.append(
        TraceStep(
            "iii",
            "G = pullback of a ruling P^3 has degree 1 in the image, so d = B^3.G = 125 (A^3.G) with A^3.G >= 1",
            "d",
            ">=",
            str(forced),
            True,
            "B = 5A, A ample",
        )
    )
    steps.append(
        TraceStep(
            "iv",
            "forced degree exceeds the degree bound: the image is not of minimal degree",
            str(forced),
            ">",
            str(bound),
            forced > bound,
            "contradiction",
        )
    )
    pn = 3 * mult
    steps.append(
        TraceStep(
            "v",
            f"L^(dim-1) = 3B = {pn}A is projectively normal when phi_B misses minimal-degree images",
            f"{pn}A",
            "projectively normal",
            "",
            all(s.holds for s in steps),
            "green-type curve section criterion",
        )
    )
    notes = (
        f"integrality sharpens h0(5A) >= {format_rational(h0_min)} to h0(5A) >= {rat_ceil(h0_min)}",
        "the printed form 125A^2.G has exponent 2; with B = 5A the degree is B^3.G = 125 A^3.G",
    )
    return TheoremATrace(True, tuple(steps), pn, f"{pn}A projectively normal", notes)


def _general_trace(scan_to: int = 200) -> TheoremATrace:
    steps: list[TraceStep] = []
    steps.append(
        TraceStep(
            "bpf",
            "sA is base point free for s >= 5",
            "s",
            ">=",
            str(BPF_MULTIPLE),
            True,
            "kawamata (axiom)",
        )
    )
    diffs_ok = all(h0_difference(n, CY4Numerics(1)).at_least_5 for n in range(BPF_MULTIPLE, 51))
    steps.append(
        TraceStep(
            "difference",
            "h0(nA) - h0((n-1)A) >= 5 for n >= 5, the numeric input of the surjectivity lemma",
            format_rational(h0_difference(BPF_MULTIPLE, CY4Numerics(1)).value),
            ">=",
            "5",
            diffs_ok,
            "riemann-roch + miyaoka",
        )
    )
    chains = {n: multiplication_chain(n) for n in range(BPF_MULTIPLE, scan_to + 1)}
    start = scan_to
    while start - 1 >= BPF_MULTIPLE and chains[start - 1] is not None:
        start -= 1
    for n in range(start, min(start + 4, scan_to + 1)):
        ch = chains[n]
        acc, parts = n, []
        for s in ch:
            parts.append(f"H0({acc}A)xH0({s}A)->H0({acc + s}A)")
            acc += s
        steps.append(
            TraceStep(
                f"chain-{n}",
                "; ".join(parts),
                str(acc),
                "==",
                str(2 * n),
                acc == 2 * n,
                "surjectivity lemma + observation on composite maps",
            )
        )
    below = chains[start - 1] if start - 1 >= BPF_MULTIPLE else None
    steps.append(
        TraceStep(
            "threshold",
            f"no valid chain for n = {start - 1}; chains exist for every n in [{start}, {scan_to}]",
            str(start - 1),
            "has no chain",
            "",
            below is None,
            "exhaustive scan",
        )
    )
    h0_5a = chi_multiple(BPF_MULTIPLE, CY4Numerics(1))
    steps.append(
        TraceStep(
            "cross-check-20",
            "20A = 4(5A) satisfies N0 since h0(5A) >= dim + 2 = 6",
            format_rational(h0_5a),
            ">=",
            "6",
            h0_5a >= 6,
            "N0 for multiples l >= dim of a base point free class",
        )
    )
    notes = (
        "for n >= 16 write n = 5j + s with 5 <= s <= 9 and j >= 2: all 5-steps start at m >= 16 and the last "
        "starts at 10j + s >= 3s + 1, so the chain exists for every n >= 16",
        "Castelnuovo-Mumford regularity alone gives N0 only for n >= 21",
        "the difference h0(nA) - h0((n-1)A) does not involve chi(O_X), so it holds without regularity",
    )
    return TheoremATrace(False, tuple(steps), start, f"nA projectively normal for n >= {start}", notes)


def theorem_a_trace(regular: bool) -> TheoremATrace:
    return _regular_trace() if regular else _general_trace()
