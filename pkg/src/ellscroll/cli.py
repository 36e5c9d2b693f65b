"""Command-line front end.

A small DSL names group elements, divisors, surfaces, linear systems and
transformation points; a recursive-descent parser turns a command line into a
:class:`Command`, and ``run`` dispatches it to the engine.  Canonical
commands round-trip through :meth:`Command.format`.

Grammar (after flag words are stripped)::

    point     := "O" | "(" INT "," INT ")"
    term      := [INT "*"] "P" point | INT "*" "O" | "O"
    divisor   := ["-"] term { ("+"|"-") term }
    surface   := "dec(" divisor ")" | "ind0" | "indm1(" point ")"
    system    := INT "X0" "+" "(" divisor ")" "f"
    pointspec := "onX0@" point | "onX1@" point | "gen@" point
               | "pair{" point "," point "}"

Commands: ``analyze s system``, ``classify s system`` (fiber degree 1),
``elm s pointspec``, ``walk s step...``, ``table N``, ``nagata target [e]``,
``mincurves s pair{..}``, ``ram s point``.  Flags: ``--group m,n``,
``--curve p,a,b``, ``--json``, ``--seed N``, ``--verify``.

Exit codes: 0 success, 1 engine error, 2 parse/semantic error.  In JSON mode
errors are also emitted on standard output as ``{"error": code, ...}``.
"""

from __future__ import annotations

import json
import shlex
import sys
from dataclasses import dataclass, field

from . import classify as classify_mod
from . import linsys
from .elmtrans import Generic, OnX0, OnX1, Pair, PointSpec, elm, walk
from .errors import EngineError, ParseError, SemanticError
from .groups import CurveGroup, GroupElement, TorusGroup, WeierstrassGroup, default_group
from .picard import Divisor, class_of
from .surface import (
    Decomposable,
    Indec0,
    IndecMinus1,
    SurfaceDivisorClass,
    SurfaceModel,
    min_curves_through,
    ramification_points,
    tau,
)

WALK_TEMPLATES = ("generic", "onX0", "onX1", "random")


# ---------------------------------------------------------------------------
# Lexer


@dataclass(frozen=True)
class Token:
    kind: str  # "INT" | "IDENT" | "SYM" | "EOF"
    text: str
    column: int


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", text[i:j], i))
            i = j
            continue
        if ch in "(){},+-*@":
            tokens.append(Token("SYM", ch, i))
            i += 1
            continue
        raise ParseError(
            f"unexpected character {ch!r} at column {i}", column=i
        )
    tokens.append(Token("EOF", "", n))
    return tokens


# ---------------------------------------------------------------------------
# Parsed expression forms (kept for exact formatting)


@dataclass(frozen=True)
class SurfaceExpr:
    kind: str  # "dec" | "ind0" | "indm1"
    divisor: Divisor | None = None
    point: GroupElement | None = None

    def model(self) -> SurfaceModel:
        if self.kind == "dec":
            return Decomposable(class_of(self.divisor))
        if self.kind == "ind0":
            return Indec0(self.point.group)
        return IndecMinus1(self.point)

    def format(self) -> str:
        if self.kind == "dec":
            return f"dec({format_divisor(self.divisor)})"
        if self.kind == "ind0":
            return "ind0"
        return f"indm1({self.point})"


@dataclass(frozen=True)
class SystemExpr:
    m: int
    divisor: Divisor

    def cls(self) -> SurfaceDivisorClass:
        return SurfaceDivisorClass(self.m, class_of(self.divisor))

    def format(self) -> str:
        return f"{self.m}X0+({format_divisor(self.divisor)})f"


def format_divisor(d: Divisor) -> str:
    if not d.terms:
        return "0*O"
    parts = []
    for point, mult in d.terms:
        base = "O" if point.is_zero() else f"P{point}"
        mag = abs(mult)
        body = base if mag == 1 else f"{mag}*{base}"
        parts.append(("-" if mult < 0 else "+", body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def format_pointspec(spec: PointSpec) -> str:
    if isinstance(spec, OnX0):
        return f"onX0@{spec.P}"
    if isinstance(spec, OnX1):
        return f"onX1@{spec.P}"
    if isinstance(spec, Generic):
        return f"gen@{spec.P}"
    return f"pair{{{spec.q},{spec.r}}}"


# ---------------------------------------------------------------------------
# Commands


@dataclass(frozen=True)
class Options:
    group: CurveGroup = field(default_factory=default_group)
    json: bool = False
    seed: int = 0
    verify: bool = False


@dataclass(frozen=True)
class Analyze:
    surface: SurfaceExpr
    system: SystemExpr

    def format(self) -> str:
        return f"analyze {self.surface.format()} {self.system.format()}"


@dataclass(frozen=True)
class Classify:
    surface: SurfaceExpr
    system: SystemExpr

    def format(self) -> str:
        return f"classify {self.surface.format()} {self.system.format()}"


@dataclass(frozen=True)
class Elm:
    surface: SurfaceExpr
    spec: PointSpec

    def format(self) -> str:
        return f"elm {self.surface.format()} {format_pointspec(self.spec)}"


@dataclass(frozen=True)
class Walk:
    surface: SurfaceExpr
    steps: tuple  # templates (str) and/or concrete PointSpecs

    def format(self) -> str:
        rendered = " ".join(
            s if isinstance(s, str) else format_pointspec(s) for s in self.steps
        )
        return f"walk {self.surface.format()} {rendered}".rstrip()


@dataclass(frozen=True)
class Table:
    n: int

    def format(self) -> str:
        return f"table {self.n}"


@dataclass(frozen=True)
class Nagata:
    target: str
    e: int | None = None

    def format(self) -> str:
        return f"nagata {self.target}" + ("" if self.e is None else f" {self.e}")


@dataclass(frozen=True)
class MinCurves:
    surface: SurfaceExpr
    pair: Pair

    def format(self) -> str:
        return f"mincurves {self.surface.format()} {format_pointspec(self.pair)}"


@dataclass(frozen=True)
class Ram:
    surface: SurfaceExpr
    t: GroupElement

    def format(self) -> str:
        return f"ram {self.surface.format()} {self.t}"


Variant = Analyze | Classify | Elm | Walk | Table | Nagata | MinCurves | Ram


@dataclass(frozen=True)
class Command:
    variant: Variant
    options: Options

    def format(self) -> str:
        out = self.variant.format()
        opt = self.options
        g = opt.group
        if isinstance(g, TorusGroup):
            if g != default_group():
                out += f" --group {g.m},{g.n}"
        else:
            out += f" --curve {g.p},{g.a},{g.b}"
        if opt.json:
            out += " --json"
        if opt.seed:
            out += f" --seed {opt.seed}"
        if opt.verify:
            out += " --verify"
        return out


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, text: str, group: CurveGroup):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.group = group

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: tuple[str, ...]) -> ParseError:
        tok = self.peek()
        got = tok.text or "end of input"
        return ParseError(
            f"expected {' or '.join(expected)}, got {got!r} at column {tok.column}",
            column=tok.column,
            expected=expected,
        )

    def expect_sym(self, sym: str) -> Token:
        tok = self.peek()
        if tok.kind == "SYM" and tok.text == sym:
            return self.next()
        raise self.fail((f"'{sym}'",))

    def expect_int(self) -> int:
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            return int(tok.text)
        raise self.fail(("integer",))

    def expect_ident(self, *names: str) -> str:
        tok = self.peek()
        if tok.kind == "IDENT" and (not names or tok.text in names):
            self.next()
            return tok.text
        raise self.fail(names or ("identifier",))

    def at_ident(self, name: str) -> bool:
        tok = self.peek()
        return tok.kind == "IDENT" and tok.text == name

    def at_sym(self, sym: str) -> bool:
        tok = self.peek()
        return tok.kind == "SYM" and tok.text == sym

    # -- grammar productions ------------------------------------------------

    def point(self) -> GroupElement:
        if self.at_ident("O"):
            self.next()
            return self.group.zero()
        if self.at_sym("("):
            self.next()
            neg_x = self.at_sym("-") and bool(self.next())
            x = self.expect_int()
            self.expect_sym(",")
            neg_y = self.at_sym("-") and bool(self.next())
            y = self.expect_int()
            self.expect_sym(")")
            x = -x if neg_x else x
            y = -y if neg_y else y
            try:
                if isinstance(self.group, WeierstrassGroup):
                    return self.group.point(x, y)
                return self.group.element(x, y)
            except ValueError as exc:
                raise SemanticError(str(exc)) from exc
        raise self.fail(("'O'", "'('"))

    def term(self) -> tuple[GroupElement, int]:
        mult = 1
        if self.peek().kind == "INT":
            mult = self.expect_int()
            self.expect_sym("*")
        tok = self.peek()
        if tok.kind == "IDENT" and tok.text == "O":
            self.next()
            return self.group.zero(), mult
        if tok.kind == "IDENT" and tok.text in ("P", "PO"):
            self.next()
            if tok.text == "PO":
                return self.group.zero(), mult
            return self.point(), mult
        raise self.fail(("'P'", "'O'"))

    def divisor(self) -> Divisor:
        terms: list[tuple[GroupElement, int]] = []
        sign = 1
        if self.at_sym("-"):
            self.next()
            sign = -1
        point, mult = self.term()
        terms.append((point, sign * mult))
        while self.at_sym("+") or self.at_sym("-"):
            sign = 1 if self.next().text == "+" else -1
            point, mult = self.term()
            terms.append((point, sign * mult))
        return Divisor.of(self.group, *terms)

    def surface(self) -> SurfaceExpr:
        name = self.expect_ident("dec", "ind0", "indm1")
        if name == "ind0":
            return SurfaceExpr("ind0", point=self.group.zero())
        self.expect_sym("(")
        if name == "dec":
            div = self.divisor()
            self.expect_sym(")")
            cls = class_of(div)
            if cls.degree > 0:
                raise SemanticError(
                    f"dec(...) needs a divisor of degree <= 0, got {cls.degree}"
                )
            return SurfaceExpr("dec", divisor=div)
        p = self.point()
        self.expect_sym(")")
        return SurfaceExpr("indm1", point=p)

    def system(self) -> SystemExpr:
        m = self.expect_int()
        self.expect_ident("X0")
        self.expect_sym("+")
        self.expect_sym("(")
        div = self.divisor()
        self.expect_sym(")")
        self.expect_ident("f")
        return SystemExpr(m, div)

    def pointspec(self) -> PointSpec:
        name = self.expect_ident("onX0", "onX1", "gen", "pair")
        if name == "pair":
            self.expect_sym("{")
            q = self.point()
            self.expect_sym(",")
            r = self.point()
            self.expect_sym("}")
            return Pair(q, r)
        self.expect_sym("@")
        p = self.point()
        return {"onX0": OnX0, "onX1": OnX1, "gen": Generic}[name](p)

    def end(self) -> None:
        if self.peek().kind != "EOF":
            raise self.fail(("end of input",))


def _check_spec_family(surface: SurfaceExpr, spec: PointSpec) -> None:
    if surface.kind == "indm1" and not isinstance(spec, Pair):
        raise SemanticError("points of indm1 are pair{...} descriptors")
    if surface.kind != "indm1" and isinstance(spec, Pair):
        raise SemanticError(f"pair{{...}} does not apply to {surface.kind}")
    if surface.kind == "ind0" and isinstance(spec, OnX1):
        raise SemanticError("ind0 has no second section onX1")


def _parse_flags(words: list[str]) -> tuple[list[str], Options]:
    group: CurveGroup | None = None
    json_mode = False
    seed = 0
    verify = False
    body: list[str] = []
    i = 0

    def split_flag(word: str) -> tuple[str, str | None]:
        if "=" in word:
            name, _, value = word.partition("=")
            return name, value
        return word, None

    while i < len(words):
        word = words[i]
        if not word.startswith("--"):
            body.append(word)
            i += 1
            continue
        name, value = split_flag(word)
        if name in ("--group", "--curve", "--seed") and value is None:
            if i + 1 >= len(words):
                raise ParseError(f"flag {name} needs a value", column=0)
            value = words[i + 1]
            i += 1
        try:
            if name == "--group":
                m, n = (int(v) for v in value.split(","))
                group = TorusGroup(m, n)
            elif name == "--curve":
                p, a, b = (int(v) for v in value.split(","))
                group = WeierstrassGroup(p, a, b)
            elif name == "--seed":
                seed = int(value)
            elif name == "--json":
                json_mode = True
            elif name == "--verify":
                verify = True
            else:
                raise ParseError(f"unknown flag {name}", column=0)
        except (ValueError, TypeError) as exc:
            raise ParseError(f"bad value for {name}: {exc}", column=0) from exc
        i += 1
    if group is None:
        group = default_group()
    return body, Options(group=group, json=json_mode, seed=seed, verify=verify)


def parse(text: str) -> Command:
    """Parse one full command line (flags may appear anywhere)."""
    try:
        words = shlex.split(text)
    except ValueError as exc:
        raise ParseError(f"unbalanced quoting: {exc}", column=0) from exc
    body, options = _parse_flags(words)
    if not body:
        raise ParseError(
            "missing command word", column=0,
            expected=("analyze", "classify", "elm", "walk", "table",
                      "nagata", "mincurves", "ram"),
        )
    parser = _Parser(" ".join(body[1:]), options.group)
    word = body[0]
    if word == "analyze":
        variant: Variant = Analyze(parser.surface(), parser.system())
    elif word == "classify":
        surface = parser.surface()
        system = parser.system()
        if system.m != 1:
            raise SemanticError("classify needs a fiber-degree-1 system (1X0+...)")
        variant = Classify(surface, system)
    elif word == "elm":
        surface = parser.surface()
        spec = parser.pointspec()
        _check_spec_family(surface, spec)
        variant = Elm(surface, spec)
    elif word == "walk":
        surface = parser.surface()
        steps: list = []
        while parser.peek().kind != "EOF":
            tok = parser.peek()
            if tok.kind == "IDENT" and tok.text in WALK_TEMPLATES:
                parser.next()
                steps.append(tok.text)
            else:
                steps.append(parser.pointspec())
        variant = Walk(surface, tuple(steps))
    elif word == "table":
        n = parser.expect_int()
        if n < 3:
            raise SemanticError("table requires an ambient dimension N >= 3")
        variant = Table(n)
    elif word == "nagata":
        target = parser.expect_ident("dec", "ind0", "indm1")
        e = None
        if parser.peek().kind == "INT":
            e = parser.expect_int()
        if target == "dec" and e is None:
            raise SemanticError("nagata dec needs the invariant e (nagata dec E)")
        variant = Nagata(target, e)
    elif word == "mincurves":
        surface = parser.surface()
        spec = parser.pointspec()
        if surface.kind != "indm1" or not isinstance(spec, Pair):
            raise SemanticError("mincurves needs an indm1 surface and a pair{...}")
        variant = MinCurves(surface, spec)
    elif word == "ram":
        surface = parser.surface()
        if surface.kind != "indm1":
            raise SemanticError("ram applies to indm1 surfaces only")
        variant = Ram(surface, parser.point())
    else:
        raise ParseError(
            f"unknown command {word!r}", column=0,
            expected=("analyze", "classify", "elm", "walk", "table",
                      "nagata", "mincurves", "ram"),
        )
    parser.end()
    return Command(variant, options)


# ---------------------------------------------------------------------------
# Dispatch


def _family_dict(model: SurfaceModel) -> dict:
    return {"family": model.family(), "e_class": str(model.e_class)}


def _run_variant(cmd: Command) -> dict | list | str:
    """Produce the command's payload (a JSON-able object or final text)."""
    v = cmd.variant
    opt = cmd.options
    if isinstance(v, Analyze):
        analysis = linsys.analyze(v.surface.model(), v.system.cls())
        return {
            "surface": _family_dict(v.surface.model()),
            "system": str(v.system.cls()),
            **analysis.to_dict(),
        }
    if isinstance(v, Classify):
        scroll = classify_mod.classify_scroll(
            v.surface.model(), v.system.cls().b
        )
        return scroll.to_dict()
    if isinstance(v, Elm):
        result = elm(v.surface.model(), v.spec)
        return {
            "rule": result.rule,
            "result": _family_dict(result.model),
            "new_minimum_section": result.y0_note,
        }
    if isinstance(v, Walk):
        result = walk(v.surface.model(), v.steps, rng_seed=opt.seed)
        return {
            "steps": [
                {"rule": step.rule, "family": step.model.family(),
                 "e_class": str(step.model.e_class)}
                for step in result.steps
            ],
            "final": _family_dict(result.trajectory[-1]),
        }
    if isinstance(v, Table):
        rows = classify_mod.emit_table(v.n, opt.group)
        if opt.json:
            return [row.to_dict() for row in rows]
        return classify_mod.render_table(v.n, rows)
    if isinstance(v, Nagata):
        plan = classify_mod.nagata_plan(v.target, v.e, opt.group)
        payload: dict = {
            "target": plan.target,
            "target_e": plan.target_e,
            "length": plan.length,
            "steps": [format_pointspec(s) for s in plan.steps],
        }
        if opt.verify:
            result = walk(classify_mod.product_surface(opt.group), plan.steps)
            payload["trajectory"] = [
                _family_dict(model) for model in result.trajectory
            ]
            payload["verified"] = classify_mod.verify_plan(plan, opt.group)
        return payload
    if isinstance(v, MinCurves):
        s = v.surface.model()
        descriptor = tau(s, v.pair.q, v.pair.r)
        curves = min_curves_through(s, descriptor)
        return {
            "point": format_pointspec(v.pair),
            "fiber": str(descriptor.t),
            "focal": descriptor.is_focal(),
            "min_curves": sorted(str(c.q) for c in curves),
        }
    s = v.surface.model()
    points = ramification_points(s, v.t)
    return {
        "fiber": str(v.t),
        "ramification_points": sorted(
            (str(p) for p in points),
        ),
    }


def _render_text(payload: dict | list | str) -> str:
    if isinstance(payload, str):
        return payload
    if isinstance(payload, list):
        return "\n".join(_render_text(item) for item in payload)
    lines = []
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        lines.append(f"{key} = {value}")
    return "\n".join(lines)


def run(cmd: Command) -> tuple[int, str]:
    """Execute a parsed command; returns (exit status, stdout text)."""
    payload = _run_variant(cmd)
    if cmd.options.json:
        if isinstance(payload, str):
            payload = {"text": payload}
        return 0, json.dumps(payload, indent=2)
    return 0, _render_text(payload)


def main(argv: list[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else list(argv)
    json_mode = any(a == "--json" or a.startswith("--json=") for a in args)
    text = " ".join(args)
    try:
        cmd = parse(text)
        status, out = run(cmd)
    except EngineError as err:
        print(f"{err.code}: {err}", file=sys.stderr)
        if json_mode:
            print(json.dumps({"error": err.code, "message": str(err)}))
        return 2 if isinstance(err, (ParseError, SemanticError)) else 1
    if out:
        print(out)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
