"""Exact rational and univariate polynomial arithmetic.

Scalars are :class:`fractions.Fraction` throughout (aliased as ``Rational``);
they are always stored reduced with a positive denominator.  Polynomials
are small immutable coefficient tuples, lowest degree first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]

__all__ = [
    "Rational",
    "as_rational",
    "rat_compare",
    "rat_floor",
    "rat_ceil",
    "rat_div",
    "format_rational",
    "parse_rational",
    "binomial",
    "UniPoly",
    "expand_half_binomial",
    "poly_eval",
    "Monotonicity",
    "is_increasing_on_nonneg_integers",
]


def as_rational(value: Number | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean scalar {value!r}")
    return Fraction(value)


def rat_compare(a: Number, b: Number) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    a, b = as_rational(a), as_rational(b)
    return (a > b) - (a < b)


def rat_floor(a: Number) -> int:
    return math.floor(as_rational(a))


def rat_ceil(a: Number) -> int:
    return math.ceil(as_rational(a))


def rat_div(a: Number, b: Number) -> Fraction:
    b = as_rational(b)
    if b == 0:
        raise ZeroDivisionError(f"division of {format_rational(a)} by zero")
    return as_rational(a) / b


def format_rational(a: Number) -> str:
    """Canonical ``p/q`` text; integers keep an explicit ``/1``."""
    a = as_rational(a)
    return f"{a.numerator}/{a.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def binomial(m: int, k: int) -> int:
    """Generalised binomial coefficient m(m-1)...(m-k+1)/k! for integer ``m``.

    Agrees with :func:`math.comb` for ``m >= 0`` and follows the polynomial
    convention (possibly negative) otherwise.
    """
    if k < 0:
        raise ValueError(f"binomial needs k >= 0, got k={k}")
    if m >= 0:
        return math.comb(m, k)
    num = 1
    for j in range(k):
        num *= m - j
    return num // math.factorial(k)


@dataclass(frozen=True)
class UniPoly:
    """Polynomial in one variable with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``.  Trailing zeros are
    stripped on construction, so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = [as_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number]) -> "UniPoly":
        return cls(tuple(as_rational(c) for c in coeffs))

    @classmethod
    def constant(cls, c: Number) -> "UniPoly":
        return cls((as_rational(c),))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly | int | Fraction") -> "UniPoly":
        if not isinstance(other, UniPoly):
            s = as_rational(other)
            return UniPoly(tuple(c * s for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x: Number) -> Fraction:
        return poly_eval(self, x)

    def shift(self, h: Number = 1) -> "UniPoly":
        """Return the polynomial ``x -> p(x + h)``."""
        result = UniPoly()
        step = UniPoly((as_rational(h), Fraction(1)))
        for c in reversed(self.coeffs):
            result = result * step + UniPoly.constant(c)
        return result

    def drop_term(self, i: int) -> "UniPoly":
        cs = list(self.coeffs)
        if i < len(cs):
            cs[i] = Fraction(0)
        return UniPoly(tuple(cs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def expand_half_binomial(shift: int, k: int, scale: Number = 1) -> UniPoly:
    """Expand ``scale * binom(x/2 + shift, k)`` as a polynomial in ``x``."""
    if k < 1:
        raise ValueError(f"expand_half_binomial needs k >= 1, got k={k}")
    # x/2 + shift - j = (x + 2(shift - j)) / 2: multiply integer factors, rescale once
    ints = [1]
    for j in range(k):
        root = 2 * (shift - j)
        nxt = [0] * (len(ints) + 1)
        for i, c in enumerate(ints):
            nxt[i] += c * root
            nxt[i + 1] += c
        ints = nxt
    factor = rat_div(scale, math.factorial(k) * 2**k)
    return UniPoly(tuple(factor * c for c in ints))


def poly_eval(p: UniPoly, x: Number) -> Fraction:
    """Horner evaluation; exact for rational ``x``."""
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class Monotonicity:
    """Outcome of a monotonicity decision together with how it was reached.

    ``certificate`` is one of ``"all-coefficients-nonnegative"``,
    ``"constant"`` or ``"scanned-to-bound"``; ``bound`` is the last integer
    checked by the scan, when a scan ran.
    """

    increasing: bool
    certificate: str
    bound: int | None = None
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.increasing


def _cauchy_bound(p: UniPoly) -> Fraction:
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def is_increasing_on_nonneg_integers(p: UniPoly) -> Monotonicity:
    """Decide whether ``p(k + 1) >= p(k)`` for every integer ``k >= 0``.

    A true answer is only returned with a certificate: either every
    coefficient is nonnegative, or the forward difference was checked on
    every integer up to its Cauchy root bound and has positive leading
    coefficient beyond it.
    """
    if p.degree <= 0:
        return Monotonicity(True, "constant")
    if all(c >= 0 for c in p.coeffs):
        return Monotonicity(True, "all-coefficients-nonnegative")

    diff = p.shift(1) - p
    if diff.degree == 0:
        # p is linear
        ok = diff.leading > 0
        return Monotonicity(ok, "scanned-to-bound", bound=0, witness=None if ok else 0)
    bound = math.ceil(_cauchy_bound(diff))
    for k in range(bound + 1):
        if poly_eval(diff, k) < 0:
            return Monotonicity(False, "scanned-to-bound", bound=bound, witness=k)
    if diff.leading < 0:
        # every real root of diff is below bound, so diff < 0 from bound+1 on
        return Monotonicity(False, "scanned-to-bound", bound=bound, witness=bound + 1)
    return Monotonicity(True, "scanned-to-bound", bound=bound)


def coefficient_text(coeffs: Sequence[Fraction]) -> str:
    return "[" + ",".join(format_rational(c) for c in coeffs) + "]"
