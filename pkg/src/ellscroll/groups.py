"""Finite abelian group models of the point group of a genus-1 curve.

Two model families are provided:

* :class:`TorusGroup` -- the product group Z/m x Z/n.  The default desk-scale
  model is Torus(12, 12): it has full 2-torsion (four square roots of any
  divisible element) and 3-torsion headroom.
* :class:`WeierstrassGroup` -- the rational points of y^2 = x^3 + ax + b over
  a small prime field, with the chord-tangent group law.  Provided for
  realism and cross-validation of the torus model.

All values are immutable and all operations are pure functions, so they can
be shared freely between threads.  Every enumeration is returned in a fixed
lexicographic order to keep set-valued results deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import GroupTooLarge, MixedGroups

#: Largest group order that ``elements()`` will enumerate.
ENUMERATION_CAP = 10_000


@dataclass(frozen=True)
class GroupElement:
    """An element of a :class:`TorusGroup` or :class:`WeierstrassGroup`.

    ``coords`` is ``(i, j)`` for the torus model, ``(x, y)`` for an affine
    Weierstrass point, and ``None`` for the Weierstrass identity (rendered as
    the token ``"O"``).
    """

    group: "TorusGroup | WeierstrassGroup"
    coords: tuple[int, int] | None

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return self.group.add(self, other)

    def __neg__(self) -> "GroupElement":
        return self.group.neg(self)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self.group.add(self, self.group.neg(other))

    def __mul__(self, k: int) -> "GroupElement":
        return self.group.mul(k, self)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self == self.group.zero()

    def sort_key(self) -> tuple:
        # Identity sorts first in the Weierstrass model.
        if self.coords is None:
            return (0,)
        return (1,) + self.coords

    def __str__(self) -> str:
        if self.coords is None:
            return "O"
        return f"({self.coords[0]},{self.coords[1]})"


def _check_same_group(g: GroupElement, h: GroupElement) -> None:
    if g.group != h.group:
        raise MixedGroups(
            f"elements of {g.group} and {h.group} cannot be combined"
        )


@dataclass(frozen=True)
class TorusGroup:
    """The group Z/m x Z/n with componentwise addition."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError("torus moduli must be positive")

    def element(self, i: int, j: int) -> GroupElement:
        return GroupElement(self, (i % self.m, j % self.n))

    def zero(self) -> GroupElement:
        return self.element(0, 0)

    def order(self) -> int:
        return self.m * self.n

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        _check_same_group(g, h)
        return self.element(g.coords[0] + h.coords[0], g.coords[1] + h.coords[1])

    def neg(self, g: GroupElement) -> GroupElement:
        return self.element(-g.coords[0], -g.coords[1])

    def mul(self, k: int, g: GroupElement) -> GroupElement:
        return self.element(k * g.coords[0], k * g.coords[1])

    def elements(self) -> list[GroupElement]:
        if self.order() > ENUMERATION_CAP:
            raise GroupTooLarge(
                f"group order {self.order()} exceeds cap {ENUMERATION_CAP}"
            )
        return [
            self.element(i, j) for i in range(self.m) for j in range(self.n)
        ]

    def halvings(self, s: GroupElement) -> frozenset[GroupElement]:
        """All elements r with r + r = s (possibly empty)."""
        _check_same_group(s, self.zero())
        out = []
        for i in _half_residues(s.coords[0], self.m):
            for j in _half_residues(s.coords[1], self.n):
                out.append(self.element(i, j))
        return frozenset(out)

    def __str__(self) -> str:
        return f"Torus({self.m},{self.n})"


def _half_residues(a: int, m: int) -> list[int]:
    """Solutions x of 2x = a (mod m)."""
    return [x for x in range(m) if (2 * x - a) % m == 0]


@dataclass(frozen=True)
class WeierstrassGroup:
    """Rational points of y^2 = x^3 + ax + b over F_p, p an odd prime."""

    p: int
    a: int
    b: int

    def __post_init__(self) -> None:
        p, a, b = self.p, self.a, self.b
        if p < 3 or any(p % d == 0 for d in range(2, min(p, 100))):
            raise ValueError(f"{p} is not a small odd prime")
        if (4 * a**3 + 27 * b**2) % p == 0:
            raise ValueError("singular curve: 4a^3 + 27b^2 = 0 mod p")

    def zero(self) -> GroupElement:
        return GroupElement(self, None)

    def point(self, x: int, y: int) -> GroupElement:
        x, y = x % self.p, y % self.p
        if (y * y - (x**3 + self.a * x + self.b)) % self.p != 0:
            raise ValueError(f"({x},{y}) is not on the curve")
        return GroupElement(self, (x, y))

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        _check_same_group(g, h)
        if g.coords is None:
            return h
        if h.coords is None:
            return g
        p = self.p
        x1, y1 = g.coords
        x2, y2 = h.coords
        if x1 == x2 and (y1 + y2) % p == 0:
            return self.zero()
        if g == h:
            lam = (3 * x1 * x1 + self.a) * pow(2 * y1, -1, p) % p
        else:
            lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
        x3 = (lam * lam - x1 - x2) % p
        y3 = (lam * (x1 - x3) - y1) % p
        return GroupElement(self, (x3, y3))

    def neg(self, g: GroupElement) -> GroupElement:
        if g.coords is None:
            return g
        return GroupElement(self, (g.coords[0], (-g.coords[1]) % self.p))

    def mul(self, k: int, g: GroupElement) -> GroupElement:
        if k < 0:
            return self.mul(-k, self.neg(g))
        acc = self.zero()
        addend = g
        while k:
            if k & 1:
                acc = self.add(acc, addend)
            addend = self.add(addend, addend)
            k >>= 1
        return acc

    def order(self) -> int:
        return len(self.elements())

    def elements(self) -> list[GroupElement]:
        return list(_weierstrass_points(self))

    def halvings(self, s: GroupElement) -> frozenset[GroupElement]:
        _check_same_group(s, self.zero())
        return frozenset(r for r in self.elements() if self.add(r, r) == s)

    def __str__(self) -> str:
        return f"Weierstrass({self.p},{self.a},{self.b})"


@lru_cache(maxsize=None)
def _weierstrass_points(group: WeierstrassGroup) -> tuple[GroupElement, ...]:
    p = group.p
    if 2 * p + 1 > ENUMERATION_CAP:
        raise GroupTooLarge(f"curve over F_{p} may exceed cap {ENUMERATION_CAP}")
    points = [group.zero()]
    squares: dict[int, list[int]] = {}
    for y in range(p):
        squares.setdefault(y * y % p, []).append(y)
    for x in range(p):
        rhs = (x**3 + group.a * x + group.b) % p
        for y in squares.get(rhs, ()):
            points.append(GroupElement(group, (x, y)))
    points.sort(key=GroupElement.sort_key)
    return tuple(points)


CurveGroup = TorusGroup | WeierstrassGroup


def default_group() -> TorusGroup:
    """The desk-scale default model."""
    return TorusGroup(12, 12)


def two_torsion(group: CurveGroup) -> frozenset[GroupElement]:
    return group.halvings(group.zero())


def sorted_elements(items: Iterable[GroupElement]) -> list[GroupElement]:
    return sorted(items, key=GroupElement.sort_key)
