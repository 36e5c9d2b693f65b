"""Scroll classification, per-ambient-space tables, and construction plans.

``classify_scroll`` turns (surface, section-class b) into a structured record
of the image scroll of the map given by ``|X0 + b*f|``: its degree, ambient
space, singular locus, projective generation, and its families of unisecant
curves with their linear-normality ranges.

``emit_table`` enumerates every scroll model living in a fixed projective
space P^N.  ``nagata_plan`` produces the minimal sequence of elementary
transformations constructing each surface family from the product surface,
and ``minimality_check`` verifies minimality by exhaustive search.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import linsys
from .elmtrans import Generic, OnX0, OnX1, Pair, elm, walk
from .errors import NotBasePointFree, UnreachableTarget
from .groups import CurveGroup, TorusGroup, default_group
from .picard import DivisorClass, trivial_class
from .surface import (
    Decomposable,
    Indec0,
    IndecMinus1,
    SurfaceDivisorClass,
    SurfaceModel,
    invariant_e,
)


@dataclass(frozen=True)
class Generation:
    """How the scroll is swept out: a correspondence between two directrix
    curves (degrees as subsets of projective space; a line has degree 1)."""

    left_degree: int
    right_degree: int
    correspondence: str  # "1:1" | "1:2" | "2:2"
    united_points: int

    def to_dict(self) -> dict:
        return {
            "left_degree": self.left_degree,
            "right_degree": self.right_degree,
            "correspondence": self.correspondence,
            "united_points": self.united_points,
        }


@dataclass(frozen=True)
class UnisecantFamily:
    """One family of irreducible unisecant curves on the scroll.

    For ``X0+af`` families the member of fiber class a has image degree
    ``deg(a) + degree_offset``; it is linearly normal exactly when its degree
    is in the recorded range (or equals ``ln_exact_degree`` on cones) and
    a is not the hyperplane class b.
    """

    system: str  # "X0" | "X1" | "X0+af"
    min_deg_a: int | None = None
    degree_offset: int | None = None
    ln_max_degree: int | None = None
    ln_exact_degree: int | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"system": self.system}
        for key in (
            "min_deg_a",
            "degree_offset",
            "ln_max_degree",
            "ln_exact_degree",
            "note",
        ):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


@dataclass(frozen=True)
class ScrollModel:
    """Full classification record of one scroll."""

    model_tag: str
    e: int
    e_class_note: str | None  # "trivial" / "nontrivial" for split e = 0 rows
    deg_b: int
    birational: bool
    map_degree: int | None
    scroll_degree: int
    ambient: int
    speciality: int
    singular_locus: str
    generation: Generation | None
    families: tuple[UnisecantFamily, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "model_tag": self.model_tag,
            "e": self.e,
            "e_class_note": self.e_class_note,
            "deg_b": self.deg_b,
            "birational": self.birational,
            "map_degree": self.map_degree,
            "scroll_degree": self.scroll_degree,
            "ambient": self.ambient,
            "speciality": self.speciality,
            "singular_locus": self.singular_locus,
            "generation": self.generation.to_dict() if self.generation else None,
            "families": [f.to_dict() for f in self.families],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _x0_af(min_deg_a: int, offset: int, ln_max: int) -> UnisecantFamily:
    return UnisecantFamily(
        "X0+af", min_deg_a=min_deg_a, degree_offset=offset, ln_max_degree=ln_max
    )


def classify_scroll(s: SurfaceModel, b: DivisorClass) -> ScrollModel:
    """Classify the image of the map defined by ``|X0 + b*f|``."""
    H = SurfaceDivisorClass(1, b)
    if not linsys.is_bpf(s, H):
        raise NotBasePointFree(f"|X0 + {b} f| has base points on this surface")
    e = invariant_e(s)
    deg_b = b.degree
    h0 = linsys.h0_surface(s, H)
    speciality = h0 - linsys.euler_characteristic(s, H)
    ambient = h0 - 1
    note = None
    if isinstance(s, Decomposable) and e == 0:
        note = "trivial" if s.e_class.is_trivial() else "nontrivial"

    def row(tag, **kw) -> ScrollModel:
        defaults = dict(
            model_tag=tag,
            e=e,
            e_class_note=note,
            deg_b=deg_b,
            birational=True,
            map_degree=1,
            scroll_degree=2 * deg_b - e,
            ambient=ambient,
            speciality=speciality,
            singular_locus="Empty",
            generation=None,
            families=(),
        )
        defaults.update(kw)
        return ScrollModel(**defaults)

    if isinstance(s, Decomposable):
        if s.e_class.is_trivial():
            if b.is_trivial():
                return row(
                    "DegenerateLine",
                    birational=False,
                    map_degree=None,
                    scroll_degree=1,
                )
            if deg_b == 2:
                return row(
                    "DoubleQuadric",
                    birational=False,
                    map_degree=2,
                    scroll_degree=2,
                    generation=Generation(1, 1, "1:1", 0),
                )
        if b == -s.e_class and e == 2:
            return row(
                "DoublePlane", birational=False, map_degree=2, scroll_degree=1
            )
        if b == -s.e_class and e > 2:
            return row(
                "Cone",
                scroll_degree=e,
                singular_locus="Vertex",
                families=(
                    UnisecantFamily("X0", note="vertex"),
                    UnisecantFamily("X1", note="hyperplane sections"),
                    UnisecantFamily(
                        "X0+af",
                        min_deg_a=1 + e,
                        degree_offset=0,
                        ln_exact_degree=1 + e,
                    ),
                ),
            )
        if e == 0 and deg_b == 2:
            return row(
                "DecScrollTwoLines",
                singular_locus="TwoDisjointLines",
                generation=Generation(1, 1, "2:2", 0),
                families=(
                    UnisecantFamily("X0"),
                    UnisecantFamily("X1"),
                    _x0_af(1, 2, 4),
                ),
            )
        if e > 0 and deg_b == e + 2:
            return row(
                "DecScrollDirectrixLine",
                singular_locus="DirectrixLine",
                generation=Generation(1, e + 2, "1:2", 0),
                families=(
                    UnisecantFamily("X0", note="unique directrix"),
                    UnisecantFamily("X1"),
                    _x0_af(1 + e, 2, 4 + e),
                ),
            )
        # deg_b >= e + 3: a smooth scroll, two family layouts by torsion.
        if s.e_class.is_trivial():
            families = (
                UnisecantFamily("X0", note="one-dimensional family"),
                _x0_af(2, deg_b, 2 * deg_b),
            )
        else:
            families = (
                UnisecantFamily("X0"),
                UnisecantFamily("X1"),
                _x0_af(e + 1, deg_b - e, 2 * deg_b - e),
            )
        return row(
            "DecScrollSmooth",
            generation=Generation(deg_b - e, deg_b, "1:1", 0),
            families=families,
        )

    if isinstance(s, Indec0):
        if deg_b == 2:
            return row(
                "Ind0Quartic",
                singular_locus="DoubleLine",
                generation=Generation(1, 3, "1:2", 1),
                families=(UnisecantFamily("X0"), _x0_af(1, 2, 4)),
            )
        return row(
            "Ind0Smooth",
            generation=Generation(deg_b, deg_b + 1, "1:1", 1),
            families=(
                UnisecantFamily("X0", note="unique directrix"),
                _x0_af(1, deg_b, 2 * deg_b),
            ),
        )

    # IndecMinus1
    if deg_b == 1:
        return row(
            "TriplePlane", birational=False, map_degree=3, scroll_degree=1
        )
    return row(
        "IndM1Smooth",
        generation=Generation(deg_b + 1, deg_b + 1, "1:1", 1),
        families=(_x0_af(0, deg_b + 1, 2 * deg_b + 1),),
    )


# ---------------------------------------------------------------------------
# Tables


def _dec_with_e(group: CurveGroup, e: int, nontrivial: bool = False) -> Decomposable:
    if e == 0 and nontrivial:
        cls = DivisorClass(0, group.elements()[1] - group.zero())
    elif e == 0:
        cls = trivial_class(group)
    else:
        cls = DivisorClass(-e, group.zero())
    return Decomposable(cls)


def _deg_class(group: CurveGroup, degree: int) -> DivisorClass:
    return DivisorClass(degree, group.zero())


def emit_table(N: int, group: CurveGroup | None = None) -> list[ScrollModel]:
    """All scroll models whose ambient space is exactly P^N (N >= 3).

    Rows are ordered by the invariant e ascending, then by case; the
    degenerate (non-birational) image in P^3 is included.  Rows with
    nonspecial hyperplane class satisfy e = N+1 (mod 2); the cone row
    (speciality 1) always closes the table.
    """
    if N < 3:
        raise ValueError("tables are emitted for N >= 3")
    if group is None:
        group = default_group()
    rows: list[ScrollModel] = []

    def add(s: SurfaceModel, deg_b: int, b: DivisorClass | None = None) -> None:
        cls = b if b is not None else _deg_class(group, deg_b)
        rows.append(classify_scroll(s, cls))

    if N == 3:
        add(Indec0(group), 2)
        add(_dec_with_e(group, 0), 2)  # degenerate double quadric
        add(_dec_with_e(group, 0, nontrivial=True), 2)
        cone = _dec_with_e(group, 3)
        add(cone, 3, b=-cone.e_class)
    elif N % 2 == 1:
        b = (N + 1) // 2
        add(Indec0(group), b)
        add(_dec_with_e(group, 0), b)
        add(_dec_with_e(group, 0, nontrivial=True), b)
        for e in range(2, N - 3, 2):
            add(_dec_with_e(group, e), (N + 1 + e) // 2)
        add(_dec_with_e(group, N - 3), N - 1)
        cone = _dec_with_e(group, N)
        add(cone, N, b=-cone.e_class)
    else:
        add(IndecMinus1(group.zero()), N // 2)
        for e in range(1, N - 3, 2):
            add(_dec_with_e(group, e), (N + 1 + e) // 2)
        if N >= 4:
            add(_dec_with_e(group, N - 3), N - 1)
        cone = _dec_with_e(group, N)
        add(cone, N, b=-cone.e_class)

    for r in rows:
        if r.model_tag != "DoubleQuadric":
            assert r.ambient == N, f"row {r.model_tag} lands in P^{r.ambient}"
    return rows


def render_table(N: int, rows: list[ScrollModel]) -> str:
    """Fixed-width text rendering mirroring the per-ambient table layout."""
    header = ["e", "deg b", "irreducible systems", "generation", "sing."]
    body: list[list[str]] = []
    for r in rows:
        e_col = f"{r.e}"
        if r.e_class_note == "trivial":
            e_col += " (e~0)"
        elif r.e_class_note == "nontrivial":
            e_col += " (e~P-Q)"
        systems = []
        for fam in r.families:
            if fam.system == "X0+af":
                systems.append(f"|X0+af|, deg a>={fam.min_deg_a}")
            else:
                systems.append(f"|{fam.system}|")
        if r.generation is None:
            if r.model_tag == "Cone":
                gen = f"cone over degree-{r.scroll_degree} curve, speciality 1"
            else:
                gen = f"degenerate ({r.model_tag})"
        else:
            g = r.generation
            gen = f"{g.left_degree} ({g.correspondence}) {g.right_degree}"
            if g.united_points:
                gen += f", {g.united_points} united point"
            gen += f"; degree {r.scroll_degree}"
        body.append([e_col, str(r.deg_b), "; ".join(systems) or "-", gen, r.singular_locus])
    widths = [
        max(len(header[i]), *(len(row[i]) for row in body)) for i in range(5)
    ]
    lines = [f"Scrolls in P^{N}"]
    lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)))
    lines.append("  ".join("-" * w for w in widths))
    for row in body:
        lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Construction plans


@dataclass(frozen=True)
class NagataPlan:
    """A sequence of transformations building a target from the product surface."""

    target: str  # "dec" | "ind0" | "indm1"
    target_e: int
    steps: tuple  # concrete point specs
    length: int

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "target_e": self.target_e,
            "steps": [type(s).__name__ for s in self.steps],
            "length": self.length,
        }


def product_surface(group: CurveGroup) -> Decomposable:
    """The starting surface of every plan (trivial invariant class)."""
    return Decomposable(trivial_class(group))


def nagata_plan(
    target: str, e: int | None = None, group: CurveGroup | None = None
) -> NagataPlan:
    """The minimal transformation plan for each surface family.

    Targets: ``"dec"`` with the invariant e (e = 0 meaning the nontrivial
    torsion variant; the trivial one is the product surface itself and gets
    the empty plan), ``"ind0"`` (two infinitely-near generic points, encoded
    as two transformations over the same base point), ``"indm1"`` (three
    generic points).
    """
    if group is None:
        group = default_group()
    elements = group.elements()
    # Three pairwise distinct base points with distinct differences.
    p1, p2, p3 = elements[1], elements[2], elements[4]
    if target == "ind0":
        return NagataPlan("ind0", 0, (Generic(p1), Generic(p1)), 2)
    if target == "indm1":
        return NagataPlan("indm1", -1, (Generic(p1), Generic(p2), Generic(p3)), 3)
    if target != "dec":
        raise UnreachableTarget(f"unknown target {target!r}")
    if e is None or e < 0:
        raise UnreachableTarget("a split target needs an invariant e >= 0")
    if e == 0:
        return NagataPlan("dec", 0, (Generic(p1), Generic(p2)), 2)
    if e == 1:
        return NagataPlan("dec", 1, (Generic(p1),), 1)
    points = (elements[k % len(elements)] for k in range(1, e + 1))
    return NagataPlan("dec", e, tuple(OnX0(p) for p in points), e)


def verify_plan(plan: NagataPlan, group: CurveGroup | None = None) -> bool:
    """Execute the plan from the product surface and check the target family."""
    if group is None:
        group = default_group()
    result = walk(product_surface(group), plan.steps)
    return _matches_target(result.trajectory[-1], plan.target, plan.target_e)


def _matches_target(model: SurfaceModel, target: str, e: int) -> bool:
    if target == "ind0":
        return isinstance(model, Indec0)
    if target == "indm1":
        return isinstance(model, IndecMinus1)
    if not isinstance(model, Decomposable):
        return False
    if invariant_e(model) != e:
        return False
    if e == 0:
        return not model.e_class.is_trivial()
    return True


def _all_specs(model: SurfaceModel) -> list:
    elements = model.group.elements()
    if isinstance(model, Decomposable):
        return [
            kind(p) for p in elements for kind in (OnX0, OnX1, Generic)
        ]
    if isinstance(model, Indec0):
        return [kind(p) for p in elements for kind in (OnX0, Generic)]
    return [
        Pair(q, r)
        for i, q in enumerate(elements)
        for r in elements[i:]
    ]


def minimality_check(
    target: str,
    e: int | None = None,
    max_len: int = 3,
    group: CurveGroup | None = None,
) -> int:
    """Shortest transformation sequence reaching the target family.

    Exhaustive breadth-first search over all point choices on a small group
    model (the reachable families do not depend on the group size, only on
    which torsion side conditions are realizable, and Z/4 x Z/4 realizes
    them all at this depth).
    """
    if max_len > 4:
        raise ValueError("exhaustive search is desk-scale: max_len <= 4")
    if group is None:
        group = TorusGroup(4, 4)
    start = product_surface(group)
    target_e = {"ind0": 0, "indm1": -1}.get(target, e if e is not None else -99)
    if _matches_target(start, target, target_e):
        return 0
    frontier: set[SurfaceModel] = {start}
    seen: set[SurfaceModel] = {start}
    for depth in range(1, max_len + 1):
        next_frontier: set[SurfaceModel] = set()
        for model in frontier:
            for spec in _all_specs(model):
                out = elm(model, spec).model
                if _matches_target(out, target, target_e):
                    return depth
                if out not in seen:
                    seen.add(out)
                    next_frontier.add(out)
        frontier = next_frontier
    raise UnreachableTarget(
        f"target {target!r} not reached within {max_len} transformations"
    )
