"""Scroll classification, table fixtures, and construction plans."""

import pytest

from ellscroll.classify import (
    classify_scroll,
    emit_table,
    minimality_check,
    nagata_plan,
    product_surface,
    render_table,
    verify_plan,
)
from ellscroll.errors import NotBasePointFree, UnreachableTarget
from ellscroll.groups import default_group
from ellscroll.picard import DivisorClass, trivial_class
from ellscroll.surface import Decomposable, Indec0, IndecMinus1

G = default_group()
O = G.zero()


def dec(e, abel=None):
    return Decomposable(DivisorClass(-e, abel if abel is not None else O))


def cls(deg, abel=None):
    return DivisorClass(deg, abel if abel is not None else O)


def fam_summary(row):
    return [(f.system, f.min_deg_a) for f in row.families]


# -- individual classifier cases --------------------------------------------


def test_base_points_refused():
    with pytest.raises(NotBasePointFree):
        classify_scroll(dec(2), cls(3))  # deg b < e + 2 and b not ~ -e_class


def test_degenerate_line_and_double_quadric():
    line = classify_scroll(dec(0), trivial_class(G))
    assert (line.model_tag, line.birational, line.ambient) == (
        "DegenerateLine", False, 1,
    )
    quadric = classify_scroll(dec(0), cls(2))
    assert quadric.model_tag == "DoubleQuadric"
    assert (quadric.map_degree, quadric.scroll_degree, quadric.ambient) == (2, 2, 3)
    assert quadric.speciality == 0


def test_double_and_triple_plane():
    s = dec(2)
    plane = classify_scroll(s, -s.e_class)
    assert plane.model_tag == "DoublePlane"
    assert (plane.map_degree, plane.ambient, plane.speciality) == (2, 2, 1)
    triple = classify_scroll(IndecMinus1(O), cls(1))
    assert triple.model_tag == "TriplePlane"
    assert (triple.map_degree, triple.ambient, triple.speciality) == (3, 2, 0)


def test_cone_rows_for_all_small_e():
    for e in range(3, 9):
        s = dec(e)
        row = classify_scroll(s, -s.e_class)
        assert row.model_tag == "Cone"
        assert row.scroll_degree == e
        assert row.ambient == e
        assert row.speciality == 1
        assert row.singular_locus == "Vertex"
        assert fam_summary(row) == [("X0", None), ("X1", None), ("X0+af", 1 + e)]
        assert row.families[2].ln_exact_degree == 1 + e


def test_two_disjoint_lines_case():
    row = classify_scroll(dec(0, G.element(1, 0)), cls(2))
    assert row.model_tag == "DecScrollTwoLines"
    assert row.singular_locus == "TwoDisjointLines"
    assert (row.scroll_degree, row.ambient) == (4, 3)
    assert row.generation.correspondence == "2:2"
    assert fam_summary(row) == [("X0", None), ("X1", None), ("X0+af", 1)]


def test_directrix_line_case():
    row = classify_scroll(dec(2), cls(4))
    assert row.model_tag == "DecScrollDirectrixLine"
    assert row.singular_locus == "DirectrixLine"
    assert (row.scroll_degree, row.ambient) == (6, 5)
    assert row.generation.correspondence == "1:2"
    assert row.generation.right_degree == 4
    assert fam_summary(row) == [("X0", None), ("X1", None), ("X0+af", 3)]
    assert row.families[2].ln_max_degree == 6


def test_smooth_split_cases_both_torsion_layouts():
    trivial = classify_scroll(dec(0), cls(4))
    assert trivial.model_tag == "DecScrollSmooth"
    assert fam_summary(trivial) == [("X0", None), ("X0+af", 2)]
    assert trivial.generation.left_degree == 4
    nontrivial = classify_scroll(dec(1, G.element(1, 0)), cls(4))
    assert fam_summary(nontrivial) == [
        ("X0", None), ("X1", None), ("X0+af", 2),
    ]
    assert nontrivial.generation.left_degree == 3
    assert nontrivial.scroll_degree == 7


def test_nonsplit_cases():
    quartic = classify_scroll(Indec0(G), cls(2))
    assert quartic.model_tag == "Ind0Quartic"
    assert quartic.singular_locus == "DoubleLine"
    assert quartic.generation.united_points == 1
    smooth0 = classify_scroll(Indec0(G), cls(3))
    assert smooth0.model_tag == "Ind0Smooth"
    assert (smooth0.scroll_degree, smooth0.ambient) == (6, 5)
    assert smooth0.generation.to_dict() == {
        "left_degree": 3, "right_degree": 4,
        "correspondence": "1:1", "united_points": 1,
    }
    smooth1 = classify_scroll(IndecMinus1(O), cls(2))
    assert smooth1.model_tag == "IndM1Smooth"
    assert (smooth1.scroll_degree, smooth1.ambient) == (5, 4)
    assert fam_summary(smooth1) == [("X0+af", 0)]


# -- table fixtures ----------------------------------------------------------


def _shape(row):
    return (
        row.model_tag,
        row.e,
        row.e_class_note,
        row.deg_b,
        row.scroll_degree,
        row.speciality,
        row.singular_locus,
        fam_summary(row),
    )


P3_FIXTURE = [
    ("Ind0Quartic", 0, None, 2, 4, 0, "DoubleLine",
     [("X0", None), ("X0+af", 1)]),
    ("DoubleQuadric", 0, "trivial", 2, 2, 0, "Empty", []),
    ("DecScrollTwoLines", 0, "nontrivial", 2, 4, 0, "TwoDisjointLines",
     [("X0", None), ("X1", None), ("X0+af", 1)]),
    ("Cone", 3, None, 3, 3, 1, "Vertex",
     [("X0", None), ("X1", None), ("X0+af", 4)]),
]


def test_table_p3_fixture():
    assert [_shape(r) for r in emit_table(3)] == P3_FIXTURE


P5_FIXTURE = [
    ("Ind0Smooth", 0, None, 3, 6, 0, "Empty",
     [("X0", None), ("X0+af", 1)]),
    ("DecScrollSmooth", 0, "trivial", 3, 6, 0, "Empty",
     [("X0", None), ("X0+af", 2)]),
    ("DecScrollSmooth", 0, "nontrivial", 3, 6, 0, "Empty",
     [("X0", None), ("X1", None), ("X0+af", 1)]),
    ("DecScrollDirectrixLine", 2, None, 4, 6, 0, "DirectrixLine",
     [("X0", None), ("X1", None), ("X0+af", 3)]),
    ("Cone", 5, None, 5, 5, 1, "Vertex",
     [("X0", None), ("X1", None), ("X0+af", 6)]),
]


def test_table_p5_fixture():
    assert [_shape(r) for r in emit_table(5)] == P5_FIXTURE


P7_FIXTURE = [
    ("Ind0Smooth", 0, None, 4, 8, 0, "Empty",
     [("X0", None), ("X0+af", 1)]),
    ("DecScrollSmooth", 0, "trivial", 4, 8, 0, "Empty",
     [("X0", None), ("X0+af", 2)]),
    ("DecScrollSmooth", 0, "nontrivial", 4, 8, 0, "Empty",
     [("X0", None), ("X1", None), ("X0+af", 1)]),
    ("DecScrollSmooth", 2, None, 5, 8, 0, "Empty",
     [("X0", None), ("X1", None), ("X0+af", 3)]),
    ("DecScrollDirectrixLine", 4, None, 6, 8, 0, "DirectrixLine",
     [("X0", None), ("X1", None), ("X0+af", 5)]),
    ("Cone", 7, None, 7, 7, 1, "Vertex",
     [("X0", None), ("X1", None), ("X0+af", 8)]),
]


def test_table_p7_fixture():
    assert [_shape(r) for r in emit_table(7)] == P7_FIXTURE


P4_FIXTURE = [
    ("IndM1Smooth", -1, None, 2, 5, 0, "Empty", [("X0+af", 0)]),
    ("DecScrollDirectrixLine", 1, None, 3, 5, 0, "DirectrixLine",
     [("X0", None), ("X1", None), ("X0+af", 2)]),
    ("Cone", 4, None, 4, 4, 1, "Vertex",
     [("X0", None), ("X1", None), ("X0+af", 5)]),
]


def test_table_p4_fixture():
    assert [_shape(r) for r in emit_table(4)] == P4_FIXTURE


P6_FIXTURE = [
    ("IndM1Smooth", -1, None, 3, 7, 0, "Empty", [("X0+af", 0)]),
    ("DecScrollSmooth", 1, None, 4, 7, 0, "Empty",
     [("X0", None), ("X1", None), ("X0+af", 2)]),
    ("DecScrollDirectrixLine", 3, None, 5, 7, 0, "DirectrixLine",
     [("X0", None), ("X1", None), ("X0+af", 4)]),
    ("Cone", 6, None, 6, 6, 1, "Vertex",
     [("X0", None), ("X1", None), ("X0+af", 7)]),
]


def test_table_p6_fixture():
    assert [_shape(r) for r in emit_table(6)] == P6_FIXTURE


def test_table_general_structure():
    for n in range(3, 13):
        rows = emit_table(n)
        assert rows[-1].model_tag == "Cone" and rows[-1].e == n
        es = [r.e for r in rows]
        assert es == sorted(es)
        for r in rows:
            if r.model_tag in ("Cone", "DoubleQuadric"):
                continue
            assert r.scroll_degree == n + 1  # nondegenerate, nonspecial rows
            assert r.e % 2 == (n + 1) % 2
            assert r.ambient == n


def test_render_table_text():
    text = render_table(3, emit_table(3))
    assert text.splitlines()[0] == "Scrolls in P^3"
    assert "Vertex" in text and "TwoDisjointLines" in text


# -- construction plans -------------------------------------------------------


def test_plans_execute_to_their_targets():
    for target, e in [("dec", 0), ("dec", 1), ("dec", 3), ("ind0", None),
                      ("indm1", None)]:
        plan = nagata_plan(target, e)
        assert verify_plan(plan)


def test_plan_lengths_match_remark():
    assert nagata_plan("dec", 0).length == 2
    assert nagata_plan("dec", 1).length == 1
    for e in (2, 3, 4):
        assert nagata_plan("dec", e).length == e
    assert nagata_plan("ind0").length == 2
    assert nagata_plan("indm1").length == 3


def test_plan_invalid_targets():
    with pytest.raises(UnreachableTarget):
        nagata_plan("dec")
    with pytest.raises(UnreachableTarget):
        nagata_plan("mystery")


def test_minimality_by_exhaustive_search():
    assert minimality_check("dec", 0) == 2
    assert minimality_check("dec", 1) == 1
    assert minimality_check("dec", 2) == 2
    assert minimality_check("dec", 3) == 3
    assert minimality_check("dec", 4, max_len=4) == 4
    assert minimality_check("ind0") == 2
    assert minimality_check("indm1") == 3


def test_minimality_unreachable_within_budget():
    with pytest.raises(UnreachableTarget):
        minimality_check("dec", 5, max_len=3)
    with pytest.raises(ValueError):
        minimality_check("dec", 9, max_len=9)


def test_product_surface_is_the_search_start():
    start = product_surface(G)
    assert start.e_class.is_trivial()
    # One step can only reach e = 1, so the nontrivial e = 0 target needs two.
    with pytest.raises(UnreachableTarget):
        minimality_check("dec", 0, max_len=1)
