"""Sparse exact polynomials in x, y and in a single parameter t.

Coefficients are :class:`fractions.Fraction` or
:class:`~secondtype.numfield.AlgebraicElement`; both support the usual
operators, so the code below never needs to know which it holds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from numbers import Rational

from .numfield import AlgebraicElement, format_upoly, is_zero, rational_value

INF = math.inf

__all__ = [
    "INF",
    "Poly1",
    "Poly2",
    "Parameterization",
    "intersection_number",
    "poly_gcd",
    "substitute",
    "total_order",
    "weighted_order",
]


def _coef(c):
    if isinstance(c, AlgebraicElement):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


def _inv(c):
    if isinstance(c, AlgebraicElement):
        return c.inverse()
    return 1 / c


def _fmt_coeff(c):
    r = rational_value(c) if not isinstance(c, AlgebraicElement) else c.rational()
    if r is not None:
        return str(r), r
    return f"({c})", None


def _join(terms):
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


class Poly1:
    """Univariate polynomial as a sparse map exponent -> coefficient."""

    __slots__ = ("terms", "var")

    def __init__(self, terms=None, var="t"):
        self.var = var
        self.terms = {}
        for k, c in (terms or {}).items():
            if c:
                self.terms[k] = _coef(c)

    @classmethod
    def _raw(cls, terms, var):
        # terms already hold valid coefficients; only zeros are dropped
        out = cls.__new__(cls)
        out.var = var
        out.terms = {k: c for k, c in terms.items() if c}
        return out

    @classmethod
    def from_coeffs(cls, coeffs, var="t"):
        return cls({k: c for k, c in enumerate(coeffs)}, var)

    @classmethod
    def monomial(cls, k, c=1, var="t"):
        return cls({k: c}, var)

    def coeffs(self):
        """Dense coefficient list, constant term first."""
        if not self.terms:
            return []
        out = [Fraction(0)] * (self.degree() + 1)
        for k, c in self.terms.items():
            out[k] = c
        return out

    def degree(self):
        return max(self.terms) if self.terms else -1

    def order(self):
        """ord_t: the smallest exponent with a nonzero coefficient."""
        for k in sorted(self.terms):
            if not is_zero(self.terms[k]):
                return k
        return INF

    def leading(self):
        return self.terms[self.degree()]

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = Poly1({0: other}, self.var)
        if not isinstance(other, Poly1):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms)))

    def _lift(self, other):
        if isinstance(other, Poly1):
            return other
        return Poly1({0: other}, self.var)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return Poly1._raw(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly1({k: -c for k, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = i + j
                out[k] = out[k] + a * b if k in out else a * b
        return Poly1._raw(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Poly1({0: 1}, self.var)
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, value):
        acc = 0
        for k in range(self.degree(), -1, -1):
            acc = acc * value + self.terms.get(k, 0)
        return acc

    def derivative(self):
        return Poly1({k - 1: k * c for k, c in self.terms.items() if k}, self.var)

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        inv_lc = _inv(other.leading())
        dg = other.degree()
        q, r = {}, dict(self.terms)
        while r and max(r) >= dg:
            k = max(r)
            c = r.pop(k) * inv_lc
            q[k - dg] = c
            for j, b in other.terms.items():
                if j == dg:
                    continue
                e = k - dg + j
                r[e] = r[e] - c * b if e in r else -c * b
                if not r[e]:
                    del r[e]
        return Poly1(q, self.var), Poly1(r, self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self:
            return self
        return self * _inv(self.leading())

    def gcd(self, other):
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self):
        g = self.gcd(self.derivative())
        return (self // g).monic()

    def __str__(self):
        return format_upoly(self.coeffs(), self.var)

    def __repr__(self):
        return f"Poly1({self})"


class Poly2:
    """Bivariate polynomial in x, y as a sparse map (i, j) -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            if c:
                self.terms[(i, j)] = _coef(c)

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    def support(self):
        return set(self.terms)

    def coeff(self, i, j):
        return self.terms.get((i, j), Fraction(0))

    def constant_term(self):
        return self.coeff(0, 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms)))

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly2):
            return other
        return Poly2.const(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly2({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly2):
            if not other:
                return Poly2()
            return Poly2({m: c * other for m, c in self.terms.items()})
        out = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out[m] + a * b if m in out else a * b
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Poly2.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def diff_x(self):
        return Poly2({(i - 1, j): i * c for (i, j), c in self.terms.items() if i})

    def diff_y(self):
        return Poly2({(i, j - 1): j * c for (i, j), c in self.terms.items() if j})

    def degree(self):
        return max((i + j for i, j in self.terms), default=-1)

    def y_degree(self):
        return max((j for _, j in self.terms), default=-1)

    def homogeneous_part(self, k):
        return Poly2({(i, j): c for (i, j), c in self.terms.items() if i + j == k})

    def evaluate(self, x, y):
        acc = 0
        for (i, j), c in self.terms.items():
            acc = acc + c * x ** i * y ** j
        return acc

    def restrict_y0(self, var="x"):
        """f(x, 0) as a univariate polynomial."""
        return Poly1({i: c for (i, j), c in self.terms.items() if j == 0}, var)

    def restrict_x0(self, var="y"):
        """f(0, y) as a univariate polynomial."""
        return Poly1({j: c for (i, j), c in self.terms.items() if i == 0}, var)

    def shift_divide(self, a=0, b=0):
        """Exact division by the monomial x^a y^b."""
        out = {}
        for (i, j), c in self.terms.items():
            if i < a or j < b:
                raise ArithmeticError(f"not divisible by x^{a} y^{b}")
            out[(i - a, j - b)] = c
        return Poly2(out)

    def monomial_content(self):
        """Exponents (a, b) of the largest monomial dividing self."""
        if not self.terms:
            return (0, 0)
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    def compose(self, X, Y):
        """f(X, Y) for polynomials X, Y (Poly2 or Poly1 in the same variable)."""
        xp, yp = [X ** 0], [Y ** 0]
        zero = X * 0
        acc = zero
        for (i, j), c in sorted(self.terms.items()):
            while len(xp) <= i:
                xp.append(xp[-1] * X)
            while len(yp) <= j:
                yp.append(yp[-1] * Y)
            acc = acc + xp[i] * yp[j] * c
        return acc

    def translate_y(self, c):
        """f(x, y + c)."""
        if not c:
            return self
        out = {}
        for (i, j), a in self.terms.items():
            cp = 1
            for k in range(j, -1, -1):
                m = (i, k)
                v = a * comb(j, k) * cp
                out[m] = out[m] + v if m in out else v
                cp = cp * c
        return Poly2(out)

    def pullback_chart1(self):
        """f(x, x y): the blow-up chart where the divisor is x = 0."""
        return Poly2({(i + j, j): c for (i, j), c in self.terms.items()})

    def pullback_chart2(self):
        """f(x y, y): the blow-up chart where the divisor is y = 0."""
        return Poly2({(i, i + j): c for (i, j), c in self.terms.items()})

    def swap(self):
        return Poly2({(j, i): c for (i, j), c in self.terms.items()})

    def _lead(self):
        # lex order, y before x
        return max(self.terms, key=lambda m: (m[1], m[0]))

    def __divmod__(self, other):
        """Division with remainder in lex order; the remainder is zero iff other | self."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        lm = other._lead()
        inv_lc = _inv(other.terms[lm])
        q, rem = {}, {}
        r = dict(self.terms)
        while r:
            m = max(r, key=lambda t: (t[1], t[0]))
            if m[0] >= lm[0] and m[1] >= lm[1]:
                c = r[m] * inv_lc
                s = (m[0] - lm[0], m[1] - lm[1])
                q[s] = q[s] + c if s in q else c
                for (i, j), b in other.terms.items():
                    e = (i + s[0], j + s[1])
                    r[e] = r[e] - c * b if e in r else -c * b
                    if not r[e]:
                        del r[e]
            else:
                rem[m] = r.pop(m)
        return Poly2(q), Poly2(rem)

    def __floordiv__(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact division")
        return q

    def normalized(self):
        """Scale so the lex-leading coefficient is 1."""
        if not self:
            return self
        return self * _inv(self.terms[self._lead()])

    def sorted_terms(self):
        """Terms in graded order: total degree ascending, x-power descending."""
        return sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], -t[0][0]))

    def __str__(self):
        out = []
        for (i, j), c in self.sorted_terms():
            parts = []
            if i:
                parts.append("x" if i == 1 else f"x^{i}")
            if j:
                parts.append("y" if j == 1 else f"y^{j}")
            mono = "*".join(parts)
            s, r = _fmt_coeff(c)
            if not mono:
                out.append(s)
            elif r == 1:
                out.append(mono)
            elif r == -1:
                out.append("-" + mono)
            else:
                out.append(f"{s}*{mono}")
        return _join(out)

    def __repr__(self):
        return f"Poly2({self})"


@dataclass(frozen=True)
class Parameterization:
    """A polynomial arc t -> (x(t), y(t)) through the origin."""

    x_of_t: Poly1
    y_of_t: Poly1

    def __post_init__(self):
        if not self.x_of_t and not self.y_of_t:
            raise ValueError("parameterization is identically zero")
        for p in (self.x_of_t, self.y_of_t):
            if p.terms.get(0):
                raise ValueError("parameterization must pass through the origin")

    def derivative(self):
        return self.x_of_t.derivative(), self.y_of_t.derivative()


def total_order(f):
    return min((i + j for i, j in f.terms), default=INF)


def weighted_order(f, p, q):
    if p < 1 or q < 1:
        raise ValueError("weights must be positive")
    d = gcd(p, q)
    return min(((i * p + j * q) // d for i, j in f.terms), default=INF)


def substitute(f, gamma):
    """f(x(t), y(t)) as a Poly1 in t."""
    return f.compose(gamma.x_of_t, gamma.y_of_t)


def _content_x(yp):
    g = None
    for c in yp.values():
        g = c if g is None else g.gcd(c)
    return g


def _to_y(f):
    out = {}
    for (i, j), c in f.terms.items():
        out.setdefault(j, {})[i] = c
    return {j: Poly1(t, "x") for j, t in out.items()}


def _from_y(yp):
    terms = {}
    for j, cx in yp.items():
        for i, c in cx.terms.items():
            terms[(i, j)] = c
    return Poly2(terms)


def _primitive(yp):
    c = _content_x(yp)
    return {j: p // c for j, p in yp.items()}, c


def _prem(a, b):
    db = max(b)
    lb = b[db]
    a = dict(a)
    while a and max(a) >= db:
        da = max(a)
        la = a[da]
        out = {j: p * lb for j, p in a.items()}
        for j, p in b.items():
            e = j + da - db
            out[e] = out[e] - la * p if e in out else -(la * p)
        a = {j: p for j, p in out.items() if p}
    return a


def poly_gcd(f, g):
    """Greatest common divisor in K[x, y], normalized to a monic lex-leading term."""
    if not f:
        return g.normalized()
    if not g:
        return f.normalized()
    a, ca = _primitive(_to_y(f))
    b, cb = _primitive(_to_y(g))
    c = ca.gcd(cb)
    if max(a) < max(b):
        a, b = b, a
    while True:
        if max(b) == 0:
            res = {0: Poly1({0: 1}, "x")}
            break
        r = _prem(a, b)
        if not r:
            res = b
            break
        a, (b, _) = b, _primitive(r)
    res, _ = _primitive(res)
    return (_from_y(res) * _from_y({0: c})).normalized()


def _ord_nonzero(p):
    return p.order()


def intersection_number(f, g):
    """Local intersection multiplicity (f, g)_0 at the origin.

    Fulton's algorithm: every step either strips a factor y from one of the
    polynomials or lowers deg g(x, 0) by subtracting a monomial multiple of
    f, which leaves the local ideal (f, g) unchanged. Returns ``INF`` when f
    and g share a component through the origin.
    """
    f, g = Poly2._lift(f), Poly2._lift(g)
    if not f or not g:
        return INF if not (f or g) or is_zero((f or g).constant_term()) else 0
    h = poly_gcd(f, g)
    if h.degree() > 0:
        if is_zero(h.constant_term()):
            return INF
        # a common factor that is a unit at the origin does not count
        f, g = f // h, g // h
    total = 0
    while True:
        if not is_zero(f.constant_term()) or not is_zero(g.constant_term()):
            return total
        if not f or not g:
            return INF
        f0, g0 = f.restrict_y0(), g.restrict_y0()
        r = f0.degree() if f0 else 0
        s = g0.degree() if g0 else 0
        if r > s:
            f, g, f0, g0, r, s = g, f, g0, f0, s, r
        if r == 0:
            if s == 0:
                return INF
            # f = y h: (f, g) = (y, g) + (h, g)
            total += _ord_nonzero(g0)
            f = f.shift_divide(0, 1)
            continue
        c = g0.leading() * _inv(f0.leading())
        g = g - f * Poly2.monomial(s - r, 0, c)
