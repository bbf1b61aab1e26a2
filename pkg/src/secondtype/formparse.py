"""Text input: polynomials, 1-forms, parameterizations and constant declarations.

Grammar::

    form    := dterm (('+' | '-') dterm)*
    dterm   := ['+' | '-'] [product ['*']] ('dx' | 'dy')
    poly    := ['+' | '-'] product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ['^' INTEGER]
    atom    := INTEGER | NAME | '(' poly ')'

Names are ``x`` and ``y`` (``t`` for parameterizations) plus constants
declared in the tower, e.g. ``b: b^2 - 2 ~ 1.414``. Multiplication is
always explicit.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .foliation import OneForm
from .numfield import QQ, FieldTower
from .polyring import Parameterization, Poly1, Poly2

__all__ = [
    "ParseContext",
    "ParseError",
    "UnknownSymbol",
    "parse_declaration",
    "parse_oneform",
    "parse_parameterization",
    "parse_poly",
    "format_oneform",
]

RESERVED = {"x", "y", "t", "dx", "dy"}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(sorted(expected))
        detail = f" (expected one of: {', '.join(self.expected)})" if expected else ""
        super().__init__(f"{message} at position {position}{detail}")


class UnknownSymbol(ParseError):
    pass


@dataclass(frozen=True)
class ParseContext:
    tower: FieldTower = QQ

    def __post_init__(self):
        clash = RESERVED.intersection(self.tower.names)
        if clash:
            raise ValueError(f"generator names collide with variables: {sorted(clash)}")

    def declare(self, text):
        return ParseContext(parse_declaration(text, self.tower))


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", int(num), start))
        elif name is not None:
            tokens.append(("name", name, start))
        else:
            tokens.append(("sym", sym, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, tower, variables, *, ring):
        self.tokens = _tokenize(text)
        self.i = 0
        self.tower = tower
        self.variables = variables
        self.ring = ring  # "xy" or "t"

    # -- helpers -------------------------------------------------------------
    @property
    def tok(self):
        return self.tokens[self.i]

    def at(self, kind, value=None):
        k, v, _ = self.tok
        return k == kind and (value is None or v == value)

    def advance(self):
        t = self.tok
        self.i += 1
        return t

    def error(self, message, expected=()):
        raise ParseError(message, self.tok[2], expected)

    def expect_sym(self, s):
        if not self.at("sym", s):
            self.error(f"unexpected {self.describe()}", {repr(s)})
        self.advance()

    def describe(self):
        k, v, _ = self.tok
        return "end of input" if k == "end" else f"{v!r}"

    def at_differential(self):
        return self.at("name") and self.tok[1] in ("dx", "dy")

    # -- polynomials ---------------------------------------------------------
    def const(self, c):
        if self.ring == "t":
            return Poly1({0: c}, "t")
        return Poly2.const(c)

    def poly(self):
        neg = False
        if self.at("sym", "+") or self.at("sym", "-"):
            neg = self.advance()[1] == "-"
        acc = self.product()
        if neg:
            acc = -acc
        while self.at("sym", "+") or self.at("sym", "-"):
            op = self.advance()[1]
            term = self.product()
            acc = acc + term if op == "+" else acc - term
        return acc

    def product(self):
        acc = self.unary()
        while self.at("sym", "*") or self.at("sym", "/"):
            if self.at("sym", "*") and self.tokens[self.i + 1][0] == "name" \
                    and self.tokens[self.i + 1][1] in ("dx", "dy"):
                break
            op = self.advance()[1]
            pos = self.tok[2]
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                c = _constant_of(rhs)
                if c is None:
                    raise ParseError("division only by nonzero constants", pos)
                acc = acc * (1 / c)
        return acc

    def unary(self):
        if self.at("sym", "-"):
            self.advance()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("sym", "^"):
            self.advance()
            if not self.at("num"):
                self.error(f"unexpected {self.describe()}", {"integer exponent"})
            return base ** self.advance()[1]
        return base

    def atom(self):
        kind, value, pos = self.tok
        if kind == "num":
            self.advance()
            return self.const(value)
        if kind == "name":
            if value in ("dx", "dy"):
                self.error("misplaced differential", {"number", "name", "'('"})
            if self.ring == "xy" and re.fullmatch(r"d[a-z]", value) \
                    and value not in self.tower.names:
                raise ParseError(f"unknown differential {value!r}", pos, {"dx", "dy"})
            self.advance()
            if value in self.variables:
                if self.ring == "t":
                    return Poly1({1: 1}, "t")
                return Poly2.x() if value == "x" else Poly2.y()
            if value in self.tower.names:
                return self.const(self.tower.gen(value))
            raise UnknownSymbol(f"unknown symbol {value!r}", pos,
                                set(self.variables) | set(self.tower.names))
        if self.at("sym", "("):
            self.advance()
            inner = self.poly()
            self.expect_sym(")")
            return inner
        self.error(f"unexpected {self.describe()}", {"number", "name", "'('"})

    # -- forms ---------------------------------------------------------------
    def form(self):
        A, B = Poly2(), Poly2()
        first = True
        while True:
            neg = False
            if self.at("sym", "+") or self.at("sym", "-"):
                neg = self.advance()[1] == "-"
            elif not first:
                break
            coeff = Poly2.const(1)
            if not self.at_differential():
                coeff = self.product()
                if self.at("sym", "*"):
                    self.advance()
            if not self.at_differential():
                if self.at("name") and re.fullmatch(r"d[a-z]", self.tok[1]):
                    raise ParseError(f"unknown differential {self.tok[1]!r}",
                                     self.tok[2], {"dx", "dy"})
                self.error(f"unexpected {self.describe()}", {"dx", "dy"})
            diff = self.advance()[1]
            if neg:
                coeff = -coeff
            if diff == "dx":
                A = A + coeff
            else:
                B = B + coeff
            first = False
        return A, B

    def finish(self):
        if not self.at("end"):
            self.error(f"unexpected {self.describe()}", {"end of input"})


def _constant_of(p):
    terms = p.terms
    if not terms:
        return None
    if len(terms) == 1:
        key = next(iter(terms))
        if key in (0, (0, 0)):
            return terms[key]
    return None


def _tower_of(ctx):
    if isinstance(ctx, ParseContext):
        return ctx.tower
    if ctx is None:
        return QQ
    return ctx


def parse_poly(text, ctx=None):
    p = _Parser(text, _tower_of(ctx), ("x", "y"), ring="xy")
    out = p.poly()
    p.finish()
    return out


def parse_oneform(text, ctx=None):
    p = _Parser(text, _tower_of(ctx), ("x", "y"), ring="xy")
    A, B = p.form()
    p.finish()
    if not A and not B:
        raise ParseError("the form is identically zero", 0)
    return OneForm(A, B)


def parse_parameterization(text, ctx=None):
    """Parse ``"x(t), y(t)"`` into a :class:`Parameterization`."""
    depth = 0
    split = None
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            if split is not None:
                raise ParseError("more than two components", k)
            split = k
    if split is None:
        raise ParseError("expected two comma-separated components", len(text), {"','"})
    comps = []
    for piece in (text[:split], text[split + 1:]):
        p = _Parser(piece, _tower_of(ctx), ("t",), ring="t")
        comps.append(p.poly())
        p.finish()
    return Parameterization(*comps)


_DECL = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*:\s*([^~]+?)\s*(?:~\s*([-+0-9.eE]+)\s*)?$")


def parse_declaration(text, tower=QQ):
    """Parse ``name: minimal_polynomial [~ decimal]`` and extend ``tower``."""
    m = _DECL.match(text)
    if m is None:
        raise ParseError("expected 'name: polynomial [~ decimal]'", 0)
    name, body, hint = m.groups()
    if name in RESERVED:
        raise ParseError(f"{name!r} is reserved", m.start(1))
    p = _Parser(body, tower, (name,), ring="t")
    poly = p.poly()
    p.finish()
    return tower.extend(poly.coeffs(), name, hint)


def format_oneform(omega):
    """Canonical text that :func:`parse_oneform` reads back to the same form."""
    parts = []
    for coeff, diff in ((omega.A, "dx"), (omega.B, "dy")):
        if coeff:
            parts.append(f"({coeff}) {diff}")
    return " + ".join(parts)
