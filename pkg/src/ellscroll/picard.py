"""Divisors and divisor classes on the base genus-1 curve.

A divisor class is canonicalized as the pair (degree, group sum of its
points); two divisors are linearly equivalent exactly when both coordinates
agree.  The base point of that correspondence is normalized to the group
identity, so the class of a single point P is simply ``(1, P)``.

Section counts follow the genus-1 dimension count: a class of positive
degree d has d sections, the trivial class has one, and everything else has
none.  ``h1`` is the section count of the negated class, so the index
identity ``h0 - h1 = degree`` holds for every class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MixedGroups
from .groups import CurveGroup, GroupElement


@dataclass(frozen=True)
class Divisor:
    """A formal sum of points with nonzero integer multiplicities.

    Kept only as the user-facing input form (the CLI parses signed sums into
    this type); all engine predicates work on :class:`DivisorClass`.
    """

    group: CurveGroup
    terms: tuple[tuple[GroupElement, int], ...]

    @staticmethod
    def of(group: CurveGroup, *terms: tuple[GroupElement, int]) -> "Divisor":
        acc: dict[GroupElement, int] = {}
        for point, mult in terms:
            if point.group != group:
                raise MixedGroups(f"point {point} not in {group}")
            acc[point] = acc.get(point, 0) + mult
        cleaned = tuple(
            (p, m)
            for p, m in sorted(acc.items(), key=lambda t: t[0].sort_key())
            if m != 0
        )
        return Divisor(group, cleaned)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.terms)

    def __add__(self, other: "Divisor") -> "Divisor":
        if self.group != other.group:
            raise MixedGroups("divisors on different groups")
        return Divisor.of(self.group, *self.terms, *other.terms)

    def __neg__(self) -> "Divisor":
        return Divisor(self.group, tuple((p, -m) for p, m in self.terms))


@dataclass(frozen=True)
class DivisorClass:
    """A linear-equivalence class, canonicalized as (degree, group sum)."""

    degree: int
    abel: GroupElement

    @property
    def group(self) -> CurveGroup:
        return self.abel.group

    def is_trivial(self) -> bool:
        return self.degree == 0 and self.abel.is_zero()

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.degree + other.degree, self.abel + other.abel)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.degree, -self.abel)

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.degree, k * self.abel)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"[deg {self.degree}, sum {self.abel}]"


def trivial_class(group: CurveGroup) -> DivisorClass:
    return DivisorClass(0, group.zero())


def point_class(point: GroupElement) -> DivisorClass:
    """The class of the single point P, i.e. (1, P)."""
    return DivisorClass(1, point)


def class_of(d: Divisor) -> DivisorClass:
    total = d.group.zero()
    for point, mult in d.terms:
        total = total + mult * point
    return DivisorClass(d.degree, total)


def h0(c: DivisorClass) -> int:
    """Number of independent sections of the class."""
    if c.degree >= 1:
        return c.degree
    if c.is_trivial():
        return 1
    return 0


def h1(c: DivisorClass) -> int:
    """Speciality; equals ``h0`` of the negated class (trivial canonical)."""
    return h0(-c)


def is_nonspecial(c: DivisorClass) -> bool:
    return h1(c) == 0


def is_bpf_curve(c: DivisorClass) -> bool:
    """True when the complete system of the class has no fixed points."""
    return c.is_trivial() or c.degree >= 2


def is_very_ample_curve(c: DivisorClass) -> bool:
    """True when the class embeds the curve (degree at least 3)."""
    return c.degree >= 3
