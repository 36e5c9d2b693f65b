"""The three ruled-surface families over a genus-1 curve.

Every surface here is a P^1-bundle over the base curve X.  Up to
normalization there are three families, distinguished by the invariant class
(written ``e_class`` below) of the normalized model:

* ``Decomposable`` -- the bundle splits; ``e_class`` has degree <= 0 and the
  numerical invariant is ``e = -degree(e_class) >= 0``.
* ``Indec0`` -- the non-split bundle with trivial invariant class (e = 0).
* ``IndecMinus1`` -- the non-split bundle with invariant class a single
  point ``p0`` (degree +1, so e = -1).

Divisor classes on a surface are written ``m*X0 + b*f``: ``m`` counts
intersections with a fiber, ``b`` is a divisor class pulled back from the
base.  The module also carries the special geometry of the e = -1 surface:
its points are represented by unordered pairs {q, r} of base points (the
symmetric-square parameterization), the pair lying on the fiber over
``q + r - p0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateModel, InvalidPointSpec, InvalidSecancy, NonNormalizedInput
from .groups import CurveGroup, GroupElement
from .picard import DivisorClass, point_class, trivial_class


@dataclass(frozen=True)
class Decomposable:
    """Split bundle; ``e_class`` must be normalized (degree <= 0)."""

    e_class: DivisorClass

    def __post_init__(self) -> None:
        if self.e_class.degree > 0:
            raise NonNormalizedInput(
                "decomposable model requires an invariant class of degree <= 0"
            )

    @property
    def group(self) -> CurveGroup:
        return self.e_class.group

    def family(self) -> str:
        return "dec"


@dataclass(frozen=True)
class Indec0:
    """Non-split bundle with trivial invariant class."""

    base: CurveGroup

    @property
    def group(self) -> CurveGroup:
        return self.base

    @property
    def e_class(self) -> DivisorClass:
        return trivial_class(self.base)

    def family(self) -> str:
        return "ind0"


@dataclass(frozen=True)
class IndecMinus1:
    """Non-split bundle whose invariant class is the point ``p0``."""

    p0: GroupElement

    @property
    def group(self) -> CurveGroup:
        return self.p0.group

    @property
    def e_class(self) -> DivisorClass:
        return point_class(self.p0)

    def family(self) -> str:
        return "indm1"


SurfaceModel = Decomposable | Indec0 | IndecMinus1


def invariant_e(s: SurfaceModel) -> int:
    """The numerical invariant: minus the degree of the invariant class."""
    return -s.e_class.degree


@dataclass(frozen=True)
class SurfaceDivisorClass:
    """The class m*X0 + b*f on a surface."""

    m: int
    b: DivisorClass

    def shift(self, delta: DivisorClass) -> "SurfaceDivisorClass":
        return SurfaceDivisorClass(self.m, self.b + delta)

    def __str__(self) -> str:
        return f"{self.m}X0+({self.b})f"


def intersect(s: SurfaceModel, A: SurfaceDivisorClass, B: SurfaceDivisorClass) -> int:
    """Intersection number of two surface classes."""
    deg_e = s.e_class.degree
    return A.m * B.m * deg_e + A.m * B.b.degree + B.m * A.b.degree


def genus_adjunction(s: SurfaceModel, D: SurfaceDivisorClass) -> int:
    """Arithmetic genus of the class, via adjunction.

    The canonical class of the surface is ``-2*X0 + e_class*f`` (the base
    curve has trivial canonical class), which collapses to a closed form in
    ``m``, ``deg b`` and ``deg e_class``.  Every fiber-degree-1 class has
    genus 1; for m = 2 the genus is ``deg(b) - e + 1``.
    """
    if D.m < 1:
        raise InvalidSecancy("genus is computed for classes with m >= 1")
    m, deg_b, deg_e = D.m, D.b.degree, s.e_class.degree
    twice = m * (m - 1) * deg_e + (2 * m - 2) * deg_b
    return 1 + twice // 2


@dataclass(frozen=True)
class MinCurve:
    """A minimum self-intersection curve D_q on the e = -1 surface.

    ``D_q`` is the unique curve in the system ``X0 + (q - p0)*f``; any two
    such curves meet in exactly one point.
    """

    q: GroupElement


@dataclass(frozen=True)
class SurfacePointDescriptor:
    """A point of the e = -1 surface, as an unordered base-point pair.

    The pair {q, r} names the intersection D_q with D_r, which lies on the
    fiber over ``t = q + r - p0``.  Diagonal pairs ({q, q}) are the points
    of the focal curve.
    """

    q: GroupElement
    r: GroupElement
    t: GroupElement

    def is_focal(self) -> bool:
        return self.q == self.r


def tau(s: IndecMinus1, q: GroupElement, r: GroupElement) -> SurfacePointDescriptor:
    """The symmetric-square parameterization of the e = -1 surface.

    Bijective from unordered base-point pairs onto surface points; the pair
    is stored in the deterministic element order.
    """
    if not isinstance(s, IndecMinus1):
        raise InvalidPointSpec("pair descriptors only exist on the e=-1 surface")
    if q.sort_key() > r.sort_key():
        q, r = r, q
    return SurfacePointDescriptor(q, r, q + r - s.p0)


def min_curves_through(
    s: IndecMinus1, x: SurfacePointDescriptor
) -> frozenset[MinCurve]:
    """The minimum curves through a point: two generically, one on the focal curve."""
    return frozenset({MinCurve(x.q), MinCurve(x.r)})


def ramification_points(s: IndecMinus1, t: GroupElement) -> frozenset[GroupElement]:
    """Focal points on the fiber over ``t``: all r with 2r = t + p0.

    On a model with full 2-torsion the answer has size 0 or 4.  No finite
    group is 2-divisible with nontrivial 2-torsion, so "four on every fiber"
    is realized as "four whenever nonempty"; any other size means the model
    lacks the required torsion and is rejected.
    """
    halves = s.group.halvings(t + s.p0)
    if len(halves) not in (0, 4):
        raise DegenerateModel(
            f"group {s.group} has {len(halves)} halvings; need 2-torsion of order 4"
        )
    return halves


def descriptors_on_generator(
    s: IndecMinus1, t: GroupElement
) -> list[SurfacePointDescriptor]:
    """All surface points on the fiber over ``t``, in deterministic order."""
    out = []
    for q in s.group.elements():
        r = t + s.p0 - q
        if q.sort_key() <= r.sort_key():
            out.append(tau(s, q, r))
    return out
