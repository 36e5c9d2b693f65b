"""CLI tests: parsing, formatting round-trips, exit codes, golden JSON."""

import json
import pathlib

import pytest
from hypothesis import given, settings, strategies as st

from ellscroll.cli import (
    Analyze,
    Classify,
    Command,
    Elm,
    MinCurves,
    Nagata,
    Options,
    Ram,
    SurfaceExpr,
    SystemExpr,
    Table,
    Walk,
    format_divisor,
    main,
    parse,
    run,
)
from ellscroll.elmtrans import Generic, OnX0, OnX1, Pair
from ellscroll.errors import ParseError, SemanticError
from ellscroll.groups import TorusGroup, default_group
from ellscroll.picard import Divisor, class_of

GOLDEN = pathlib.Path(__file__).parent / "golden"
G = default_group()


# -- direct parses -----------------------------------------------------------


def test_parse_classify_example():
    cmd = parse('classify dec(-P(1,0)-P(2,0)) "1X0+(P(1,0)+P(2,0)+P(3,0))f"')
    assert isinstance(cmd.variant, Classify)
    surface = cmd.variant.surface.model()
    assert -surface.e_class.degree == 2
    assert cmd.variant.system.cls().b.degree == 3


def test_parse_table_json():
    cmd = parse("table 3 --json")
    assert cmd.variant == Table(3)
    assert cmd.options.json is True


def test_parse_elm_pair():
    cmd = parse("elm indm1(O) pair{(1,0),(2,0)}")
    assert isinstance(cmd.variant, Elm)
    assert cmd.variant.spec == Pair(G.element(1, 0), G.element(2, 0))


def test_parse_flags_group_and_seed():
    cmd = parse("walk ind0 random random --group 6,6 --seed 42")
    assert cmd.options.group == TorusGroup(6, 6)
    assert cmd.options.seed == 42
    assert cmd.variant.steps == ("random", "random")


def test_parse_curve_group_points_validated():
    cmd = parse("ram indm1(O) (0,4) --curve 13,2,3")
    assert cmd.variant.t == cmd.options.group.point(0, 4)
    with pytest.raises(SemanticError):
        parse("ram indm1(O) (0,5) --curve 13,2,3")  # not on the curve


def test_parse_errors_carry_position_and_expectations():
    with pytest.raises(ParseError) as info:
        parse("analyze dec(-P(1,0) 1X0+(O)f")
    assert info.value.column is not None
    assert info.value.expected
    with pytest.raises(ParseError):
        parse("frobnicate ind0")
    with pytest.raises(ParseError):
        parse("walk ind0 --bogus-flag")
    with pytest.raises(ParseError):
        parse("")


def test_semantic_errors():
    with pytest.raises(SemanticError):
        parse("elm dec(0*O) pair{(1,0),(2,0)}")
    with pytest.raises(SemanticError):
        parse("elm indm1(O) gen@(1,0)")
    with pytest.raises(SemanticError):
        parse("elm ind0 onX1@(1,0)")
    with pytest.raises(SemanticError):
        parse('classify dec(P(1,0)) "1X0+(3*P(0,1))f"')  # positive degree
    with pytest.raises(SemanticError):
        parse('classify ind0 "2X0+(3*P(0,1))f"')  # fiber degree must be 1
    with pytest.raises(SemanticError):
        parse("nagata dec")
    with pytest.raises(SemanticError):
        parse("table 2")


# -- round-trips -------------------------------------------------------------

coords = st.tuples(st.integers(0, 11), st.integers(0, 11))


@st.composite
def divisors(draw, max_deg=None, force_nonpositive=False):
    pairs = draw(
        st.dictionaries(coords, st.integers(-3, 3).filter(bool), max_size=4)
    )
    terms = [(G.element(i, j), m) for (i, j), m in pairs.items()]
    if force_nonpositive and sum(m for _, m in terms) > 0:
        terms = [(p, -m) for p, m in terms]
    return Divisor.of(G, *terms)


@st.composite
def surfaces(draw):
    kind = draw(st.sampled_from(["dec", "ind0", "indm1"]))
    if kind == "dec":
        return SurfaceExpr("dec", divisor=draw(divisors(force_nonpositive=True)))
    if kind == "ind0":
        return SurfaceExpr("ind0", point=G.zero())
    i, j = draw(coords)
    return SurfaceExpr("indm1", point=G.element(i, j))


@st.composite
def systems(draw, m=None):
    fiber = m if m is not None else draw(st.integers(1, 3))
    return SystemExpr(fiber, draw(divisors()))


points = st.builds(G.element, st.integers(0, 11), st.integers(0, 11))
pointspecs = st.one_of(
    st.builds(OnX0, points),
    st.builds(OnX1, points),
    st.builds(Generic, points),
    st.builds(Pair, points, points),
)


@st.composite
def commands(draw):
    surface = draw(surfaces())
    choice = draw(st.integers(0, 7))
    if choice == 0:
        variant = Analyze(surface, draw(systems()))
    elif choice == 1:
        variant = Classify(surface, draw(systems(m=1)))
    elif choice == 2:
        spec = draw(pointspecs)
        if surface.kind == "indm1":
            q, r = draw(points), draw(points)
            spec = Pair(q, r)
        elif isinstance(spec, Pair) or (
            surface.kind == "ind0" and isinstance(spec, OnX1)
        ):
            spec = Generic(draw(points))
        variant = Elm(surface, spec)
    elif choice == 3:
        steps = tuple(
            draw(st.lists(st.sampled_from(["generic", "onX0", "random"]),
                          min_size=1, max_size=4))
        )
        variant = Walk(surface, steps)
    elif choice == 4:
        variant = Table(draw(st.integers(3, 9)))
    elif choice == 5:
        target = draw(st.sampled_from(["dec", "ind0", "indm1"]))
        e = draw(st.integers(0, 4)) if target == "dec" else None
        variant = Nagata(target, e)
    elif choice == 6:
        q, r = draw(points), draw(points)
        variant = MinCurves(
            SurfaceExpr("indm1", point=draw(points)), Pair(q, r)
        )
    else:
        variant = Ram(SurfaceExpr("indm1", point=draw(points)), draw(points))
    options = Options(
        group=default_group(),
        json=draw(st.booleans()),
        seed=draw(st.sampled_from([0, 7])),
        verify=draw(st.booleans()) if isinstance(variant, Nagata) else False,
    )
    return Command(variant, options)


@settings(max_examples=1000, deadline=None)
@given(commands())
def test_parse_format_roundtrip(cmd):
    assert parse(cmd.format()) == cmd


@given(divisors())
def test_divisor_format_roundtrip_preserves_class(d):
    text = format_divisor(d)
    cmd = parse(f"analyze dec(0*O) 1X0+({text})f")
    assert class_of(cmd.variant.system.divisor) == class_of(d)


# -- execution and exit codes ------------------------------------------------


def test_main_success_exit_zero(capsys):
    assert main(["analyze", "ind0", "2X0+(P(1,0)+P(2,0))f"]) == 0
    out = capsys.readouterr().out
    assert "h0 = 6" in out


def test_main_parse_error_exit_two(capsys):
    assert main(["analyze", "dec(", "1X0+(O)f"]) == 2
    err = capsys.readouterr().err
    assert "ParseError" in err


def test_main_semantic_error_exit_two(capsys):
    assert main(["elm", "ind0", "pair{(1,0),(2,0)}"]) == 2
    assert "SemanticError" in capsys.readouterr().err


def test_main_engine_error_exit_one(capsys):
    # Base points: classification refuses -> engine error, exit 1.
    assert main(["classify", "dec(-2*O)", "1X0+(3*O)f"]) == 1
    assert "NotBasePointFree" in capsys.readouterr().err


def test_main_engine_error_json_payload(capsys):
    assert main(["analyze", "ind0", "3X0+(4*O)f", "--json"]) == 1
    captured = capsys.readouterr()
    payload = json.loads(captured.out)
    assert payload["error"] == "UnsupportedSecancy"
    assert "UnsupportedSecancy" in captured.err


def test_main_walk_seeded_deterministic(capsys):
    argv = ["walk", "indm1(O)", "generic", "generic", "--seed", "5", "--json"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_mincurves_and_ram_commands(capsys):
    assert main(["mincurves", "indm1(O)", "pair{(1,0),(1,0)}", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["focal"] is True and len(payload["min_curves"]) == 1
    assert main(["ram", "indm1(O)", "(0,0)", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["ramification_points"]) == 4


# -- golden files ------------------------------------------------------------

GOLDEN_COMMANDS = {
    "analyze.json": 'analyze ind0 "2X0+(P(1,0)+P(2,0))f" --json',
    "table3.json": "table 3 --json",
    "elm.json": "elm indm1(O) pair{(1,0),(2,0)} --json",
}


@pytest.mark.parametrize("name", sorted(GOLDEN_COMMANDS))
def test_golden_json_schema_stable(name):
    status, out = run(parse(GOLDEN_COMMANDS[name]))
    assert status == 0
    expected = (GOLDEN / name).read_text()
    assert json.loads(out) == json.loads(expected)
    assert out + "\n" == expected
