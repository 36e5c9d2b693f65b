"""The elementary-transformation rule engine.

An elementary transformation blows up one point of a ruled surface and blows
down the strict transform of the fiber through it.  On the three families
over a genus-1 base the effect is captured by a finite rule table keyed on
where the chosen point sits:

* on a decomposable surface: on the negative section (``OnX0``), on the
  positive section (``OnX1``), or on neither (``Generic``);
* on the non-split e = 0 surface: on the minimum section or off it;
* on the e = -1 surface: an unordered pair descriptor, diagonal (focal
  point, one minimum curve through it) or split (two minimum curves).

Every rule moves the invariant e by exactly +-1, and the image of the rule
table never leaves the three normalized families -- the desk-scale shadow of
the fact that there are only two non-split models.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidPointSpec, InvalidSecancy
from .groups import GroupElement
from .picard import DivisorClass, point_class, trivial_class
from .surface import (
    Decomposable,
    Indec0,
    IndecMinus1,
    SurfaceDivisorClass,
    SurfaceModel,
    intersect,
)


# ---------------------------------------------------------------------------
# Point descriptors


@dataclass(frozen=True)
class OnX0:
    """A point of the minimum section, on the fiber over P."""

    P: GroupElement


@dataclass(frozen=True)
class OnX1:
    """A point of the second split section (decomposable surfaces only)."""

    P: GroupElement


@dataclass(frozen=True)
class Generic:
    """A point on the fiber over P, off the distinguished sections."""

    P: GroupElement


@dataclass(frozen=True)
class Pair:
    """Unordered pair descriptor for a point of the e = -1 surface."""

    q: GroupElement
    r: GroupElement

    def __post_init__(self) -> None:
        # Normalize so that {q, r} == {r, q}.
        if self.q.sort_key() > self.r.sort_key():
            q, r = self.q, self.r
            object.__setattr__(self, "q", r)
            object.__setattr__(self, "r", q)


def make_pair(q: GroupElement, r: GroupElement) -> Pair:
    if q.sort_key() > r.sort_key():
        q, r = r, q
    return Pair(q, r)


PointSpec = OnX0 | OnX1 | Generic | Pair


# ---------------------------------------------------------------------------
# Transformation result


@dataclass(frozen=True)
class ElmResult:
    """Outcome of one elementary transformation."""

    model: SurfaceModel
    e_class_new: DivisorClass
    #: Which curve of the source became the new minimum section.
    y0_note: str  # "X0prime" | "X1prime" | "DRprime"
    #: Identifier of the rule branch that fired (13 branches in total).
    rule: str


def _dec(e_class: DivisorClass, y0: str, rule: str) -> ElmResult:
    return ElmResult(Decomposable(e_class), e_class, y0, rule)


def elm(s: SurfaceModel, x: PointSpec) -> ElmResult:
    """Apply one elementary transformation at the described point."""
    if isinstance(s, Decomposable):
        return _elm_dec(s, x)
    if isinstance(s, Indec0):
        return _elm_ind0(s, x)
    return _elm_indm1(s, x)


def _elm_dec(s: Decomposable, x: PointSpec) -> ElmResult:
    if isinstance(x, Pair):
        raise InvalidPointSpec("pair descriptors only apply to the e=-1 surface")
    e_cls = s.e_class
    e = -e_cls.degree
    P = point_class(x.P)
    if e_cls.is_trivial():
        # One formula for every point: the transform splits again.
        return _dec(-P, "X0prime", "dec_trivial_any")
    if isinstance(x, OnX0):
        rule = "dec_onX0_epos" if e >= 1 else "dec_e0_onX0"
        return _dec(e_cls - P, "X0prime", rule)
    if e >= 2:
        return _dec(e_cls + P, "X0prime", "dec_e2_offX0")
    if e == 1:
        if e_cls != -P:
            return _dec(e_cls + P, "X0prime", "dec_e1_offX0_plain")
        if isinstance(x, OnX1):
            return _dec(trivial_class(s.group), "X0prime", "dec_e1_onX1_torsion")
        # Generic point over the single base point of -e_class: the
        # transform no longer splits but keeps a trivial invariant class.
        model = Indec0(s.group)
        return ElmResult(model, model.e_class, "X0prime", "dec_e1_gen_torsion")
    # e == 0 with a nontrivial invariant class.
    if isinstance(x, OnX1):
        return _dec(-e_cls - P, "X1prime", "dec_e0_onX1")
    new_e = e_cls + P  # degree 1
    model = IndecMinus1(new_e.abel)
    return ElmResult(model, model.e_class, "X0prime", "dec_e0_gen")


def _elm_ind0(s: Indec0, x: PointSpec) -> ElmResult:
    if isinstance(x, (Pair, OnX1)):
        raise InvalidPointSpec("this surface has no X1 section or pair points")
    P = point_class(x.P)
    if isinstance(x, OnX0):
        return _dec(-P, "X0prime", "ind0_onX0")
    model = IndecMinus1(x.P)
    return ElmResult(model, model.e_class, "X0prime", "ind0_gen")


def _elm_indm1(s: IndecMinus1, x: PointSpec) -> ElmResult:
    if not isinstance(x, Pair):
        raise InvalidPointSpec("points of the e=-1 surface are pair descriptors")
    if x.q == x.r:
        # Focal point: a single minimum curve passes through it, and
        # 2q ~ p0 + t forces the new invariant class to be trivial.
        model = Indec0(s.group)
        return ElmResult(model, model.e_class, "DRprime", "indm1_diag")
    # Split point: two minimum curves through it; transforming along the
    # first gives the split model with invariant class q - r (nontrivial).
    new_e = DivisorClass(0, x.q - x.r)
    return _dec(new_e, "DRprime", "indm1_split")


#: All 13 rule identifiers, for coverage bookkeeping.
ALL_RULES = (
    "dec_onX0_epos",
    "dec_e2_offX0",
    "dec_e1_offX0_plain",
    "dec_e1_onX1_torsion",
    "dec_e1_gen_torsion",
    "dec_e0_onX0",
    "dec_e0_onX1",
    "dec_e0_gen",
    "dec_trivial_any",
    "ind0_onX0",
    "ind0_gen",
    "indm1_diag",
    "indm1_split",
)


# ---------------------------------------------------------------------------
# Class transport and system correspondence


def transport_unisecant(
    s: SurfaceModel, x: PointSpec, D: SurfaceDivisorClass, passes_through: bool
) -> int:
    """Self-intersection of the strict transform of a section-class curve."""
    if D.m != 1:
        raise InvalidSecancy("transport is defined for section classes only")
    d2 = intersect(s, D, D)
    return d2 - 1 if passes_through else d2 + 1


@dataclass(frozen=True)
class SystemCorrespondence:
    """Bookkeeping record relating systems across a transformation.

    The complete system ``m*Y + a*f`` on the transformed surface matches the
    subsystem of ``m*C + (a + m*P)*f`` on the source consisting of members
    with an m-fold point at the transformed location.
    """

    secancy: int
    source_fiber_class: DivisorClass
    point_multiplicity: int

    def describe(self) -> str:
        return (
            f"{self.secancy}-secant system pulls back to fiber part "
            f"{self.source_fiber_class} minus a {self.point_multiplicity}-fold point"
        )


def system_correspondence(
    C_secancy: int, a: DivisorClass, P: GroupElement
) -> SystemCorrespondence:
    if C_secancy < 1:
        raise InvalidSecancy("correspondence requires secancy >= 1")
    return SystemCorrespondence(
        secancy=C_secancy,
        source_fiber_class=a + C_secancy * point_class(P),
        point_multiplicity=C_secancy,
    )


# ---------------------------------------------------------------------------
# Walks


@dataclass(frozen=True)
class WalkResult:
    trajectory: tuple[SurfaceModel, ...]
    steps: tuple[ElmResult, ...]


def resolve_template(template, model: SurfaceModel, rng: random.Random) -> PointSpec:
    """Turn a walk-step template into a concrete point on ``model``.

    A template is either a concrete :class:`PointSpec` (validated against
    the family by ``elm`` itself) or one of the strings ``"generic"``,
    ``"onX0"``, ``"onX1"``, ``"random"``.
    """
    if not isinstance(template, str):
        return template
    elements = model.group.elements()
    pick = lambda: rng.choice(elements)
    if isinstance(model, IndecMinus1):
        if template == "generic":
            q = pick()
            r = pick()
            while r == q:
                r = pick()
            return make_pair(q, r)
        if template == "random":
            return make_pair(pick(), pick())
        raise InvalidPointSpec(f"template {template!r} on the e=-1 surface")
    kinds = {
        "generic": (Generic,),
        "onX0": (OnX0,),
        "onX1": (OnX1,) if isinstance(model, Decomposable) else (),
        "random": (Generic, OnX0, OnX1)
        if isinstance(model, Decomposable)
        else (Generic, OnX0),
    }.get(template, ())
    if not kinds:
        raise InvalidPointSpec(f"template {template!r} on family {model.family()}")
    return rng.choice(kinds)(pick())


def walk(s0: SurfaceModel, templates, rng_seed: int = 0) -> WalkResult:
    """Apply a sequence of transformations; deterministic for a fixed seed."""
    rng = random.Random(rng_seed)
    trajectory = [s0]
    steps = []
    model = s0
    for template in templates:
        spec = resolve_template(template, model, rng)
        result = elm(model, spec)
        steps.append(result)
        model = result.model
        trajectory.append(model)
    return WalkResult(tuple(trajectory), tuple(steps))
