"""Varieties of minimal degree (``deg = 1 + codim``).

Eisenbud-Harris: such a variety is a projective space, a quadric, a
rational normal scroll ``S(a_1, ..., a_m)`` (cones when some ``a_i = 0``),
the Veronese surface in P^5, or a cone over it.  The classification itself
is taken as data; this module only does the bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class ProjectiveSpace:
    dim: int

    @property
    def ambient(self) -> int:
        return self.dim


@dataclass(frozen=True)
class Quadric:
    dim: int
    ambient: int
    # rank is not modelled; free text only
    note: str = "possibly singular"


@dataclass(frozen=True)
class SmoothScroll:
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.a or any(x < 1 for x in self.a):
            raise ValueError(f"smooth scroll needs all a_i >= 1, got {self.a}")
        object.__setattr__(self, "a", tuple(sorted(self.a)))

    @property
    def dim(self) -> int:
        return len(self.a)

    @property
    def ambient(self) -> int:
        return sum(self.a) + len(self.a) - 1


@dataclass(frozen=True)
class ConeOverScroll:
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(sorted(self.a))
        if not a or a[0] != 0 or a[-1] == 0 or a[0] < 0:
            raise ValueError(f"cone over a scroll needs some zero and some positive a_i, got {self.a}")
        object.__setattr__(self, "a", a)

    @property
    def vertex_dim(self) -> int:
        return self.a.count(0) - 1

    @property
    def dim(self) -> int:
        return len(self.a)

    @property
    def ambient(self) -> int:
        return sum(self.a) + len(self.a) - 1

    @property
    def over_curve(self) -> bool:
        """Cone over a rational normal curve (exactly one nonzero a_i)."""
        return sum(1 for x in self.a if x) == 1


@dataclass(frozen=True)
class Veronese:
    @property
    def dim(self) -> int:
        return 2

    @property
    def ambient(self) -> int:
        return 5


@dataclass(frozen=True)
class ConeOverVeronese:
    vertex_dim: int

    def __post_init__(self) -> None:
        if self.vertex_dim < 0:
            raise ValueError(f"vertex dimension must be >= 0, got {self.vertex_dim}")

    @property
    def dim(self) -> int:
        return self.vertex_dim + 3

    @property
    def ambient(self) -> int:
        return self.vertex_dim + 6


MinimalDegreeClass = Union[
    ProjectiveSpace, Quadric, SmoothScroll, ConeOverScroll, Veronese, ConeOverVeronese
]

CONE_CLASSES = (ConeOverScroll, ConeOverVeronese)


def minimal_degree(dim: int, ambient_r: int) -> int:
    if dim < 1 or ambient_r < dim:
        raise ValueError(f"need 1 <= dim <= ambient_r, got dim={dim}, r={ambient_r}")
    return 1 + ambient_r - dim


def scroll_degree(a: tuple[int, ...] | list[int]) -> int:
    if not a or any(x < 0 for x in a):
        raise ValueError(f"scroll type must be a nonempty list of nonnegative integers, got {a}")
    if not any(a):
        raise ValueError("scroll type cannot be all zeros")
    return sum(a)


@dataclass(frozen=True)
class EmbeddedVMD:
    cls: MinimalDegreeClass
    dim: int
    ambient_r: int
    degree: int

    def __post_init__(self) -> None:
        if self.degree != 1 + self.ambient_r - self.dim:
            raise ValueError(
                f"{self.token}: degree {self.degree} != 1 + codim {self.ambient_r - self.dim}"
            )

    @classmethod
    def of(cls, c: MinimalDegreeClass) -> "EmbeddedVMD":
        return cls(c, c.dim, c.ambient, minimal_degree(c.dim, c.ambient))

    @property
    def codim(self) -> int:
        return self.ambient_r - self.dim

    @property
    def token(self) -> str:
        return class_token(self.cls, self.ambient_r)

    def __str__(self) -> str:
        return self.token


def class_token(c: MinimalDegreeClass, ambient_r: int | None = None) -> str:
    """Stable text form, e.g. ``scroll(1,1,1,2)@P7`` or ``quadric@P5``."""
    r = c.ambient if ambient_r is None else ambient_r
    if isinstance(c, ProjectiveSpace):
        head = "projective"
    elif isinstance(c, Quadric):
        head = "quadric"
    elif isinstance(c, SmoothScroll):
        head = "scroll(" + ",".join(map(str, c.a)) + ")"
    elif isinstance(c, ConeOverScroll):
        head = "cone-scroll(" + ",".join(map(str, c.a)) + ")"
    elif isinstance(c, Veronese):
        head = "veronese"
    elif isinstance(c, ConeOverVeronese):
        head = f"cone-veronese(v={c.vertex_dim})"
    else:
        raise TypeError(f"not a minimal degree class: {c!r}")
    return f"{head}@P{r}"


def scroll_shapes(parts: int, total: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples of ``parts`` nonnegative integers summing to ``total``."""

    def rec(remaining: int, slots: int, floor: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        # the smallest part can be at most remaining // slots
        for x in range(floor, remaining // slots + 1):
            for rest in rec(remaining - x, slots - 1, x):
                yield (x,) + rest

    if total > 0:
        yield from rec(total, parts, 0)


def classify(dim: int, ambient_r: int) -> list[EmbeddedVMD]:
    """Every minimal-degree description of a ``dim``-fold in ``P^ambient_r``.

    Scroll shapes are listed for every codimension, so in codimension one a
    rank 3 or 4 quadric also appears as a cone over a conic or a quadric
    surface.
    """
    degree = minimal_degree(dim, ambient_r)
    codim = ambient_r - dim
    out: list[EmbeddedVMD] = []
    if codim == 0:
        out.append(EmbeddedVMD.of(ProjectiveSpace(dim)))
    if codim == 1:
        out.append(EmbeddedVMD(Quadric(dim, ambient_r), dim, ambient_r, degree))
    for a in scroll_shapes(dim, degree):
        c = SmoothScroll(a) if a[0] > 0 else ConeOverScroll(a)
        out.append(EmbeddedVMD.of(c))
    if (dim, ambient_r) == (2, 5):
        out.append(EmbeddedVMD.of(Veronese()))
    if codim == 3 and dim >= 3:
        out.append(EmbeddedVMD.of(ConeOverVeronese(dim - 3)))
    return out


def singular_candidates(dim: int, ambient_r: int) -> list[EmbeddedVMD]:
    """The part of :func:`classify` that a smooth factorial variety without a
    fibration over P^1 can map onto: quadrics, Veronese surfaces and their
    cones, and cones over a rational normal curve.

    Equals ``[e for e in classify(dim, r) if admissible_for_smooth_source(e.cls)
    and not isinstance(e.cls, SmoothScroll)]`` without enumerating partitions.
    """
    degree = minimal_degree(dim, ambient_r)
    codim = ambient_r - dim
    out: list[EmbeddedVMD] = []
    if codim == 0:
        out.append(EmbeddedVMD.of(ProjectiveSpace(dim)))
    if codim == 1:
        out.append(EmbeddedVMD(Quadric(dim, ambient_r), dim, ambient_r, degree))
    if dim >= 2:
        out.append(EmbeddedVMD.of(ConeOverScroll((0,) * (dim - 1) + (degree,))))
    if (dim, ambient_r) == (2, 5):
        out.append(EmbeddedVMD.of(Veronese()))
    if codim == 3 and dim >= 3:
        out.append(EmbeddedVMD.of(ConeOverVeronese(dim - 3)))
    return out


def vertex_codim(c: MinimalDegreeClass, dim: int | None = None) -> int | None:
    """Codimension of the cone vertex inside the variety, ``None`` for non-cones."""
    if not isinstance(c, CONE_CLASSES):
        return None
    d = c.dim if dim is None else dim
    return d - c.vertex_dim


def admissible_for_smooth_source(c: MinimalDegreeClass) -> bool:
    """Can ``c`` be the image of a smooth factorial variety under a complete linear system?

    Singular scrolls must have a codimension two vertex, i.e. be cones over a
    rational normal curve.  Veronese cones are not scrolls and always have a
    codimension three vertex; they are kept.
    """
    if isinstance(c, ConeOverScroll):
        return vertex_codim(c) == 2
    return isinstance(c, (Quadric, SmoothScroll, Veronese, ConeOverVeronese, ProjectiveSpace))


def hyperplane_ruling_multiplier(e: EmbeddedVMD) -> int:
    """``H ~ deg(Y) R`` on a cone over a rational normal curve; returns ``deg(Y)``."""
    c = e.cls
    if not isinstance(c, ConeOverScroll) or vertex_codim(c) != 2:
        raise ValueError(f"{e.token} is not a cone over a rational normal curve")
    return e.degree
