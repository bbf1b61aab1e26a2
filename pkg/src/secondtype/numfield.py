"""Exact arithmetic over Q and towers of simple algebraic extensions.

Rational numbers are plain :class:`fractions.Fraction` values. A tower
``Q(a1)(a2)...`` is a :class:`FieldTower`; its elements are
:class:`AlgebraicElement` instances holding a coordinate vector in the power
basis of the top generator, whose entries live in the tower one level down.

Moduli are only required to be squarefree. When an inversion meets a zero
divisor, :class:`SplitEvent` is raised with the two factors found by the
extended gcd, and the caller is expected to continue once per factor
(dynamic evaluation).
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = [
    "AlgebraicElement",
    "FieldTower",
    "NameClash",
    "NotSquarefree",
    "SplitEvent",
    "QQ",
    "is_zero",
    "rational_value",
    "is_positive_rational",
]


class SplitEvent(Exception):
    """A modulus turned out to be reducible.

    ``factors`` are two monic coefficient lists (low degree first) over the
    tower below ``level``; their product is the modulus.
    """

    def __init__(self, level, name, factors):
        super().__init__(f"modulus of {name!r} splits into degrees "
                         f"{len(factors[0]) - 1} and {len(factors[1]) - 1}")
        self.level = level
        self.name = name
        self.factors = factors


class NotSquarefree(ValueError):
    pass


class NameClash(ValueError):
    pass


def _inv(c):
    if isinstance(c, AlgebraicElement):
        return c.inverse()
    if c == 0:
        raise ZeroDivisionError("division by zero")
    return 1 / Fraction(c)


# -- dense univariate helpers, coefficients low degree first -----------------

def _trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return _trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _pdivmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lc = _inv(b[-1])
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] * inv_lc
        k = len(r) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            if bi:
                r[k + i] = r[k + i] - c * bi
        r.pop()
        r = _trim(r)
    return _trim(q), r


def _monic(a):
    a = _trim(a)
    if not a:
        return a
    inv_lc = _inv(a[-1])
    return [c * inv_lc for c in a]


def _xgcd(a, b):
    """Return (g, s) with g monic and s*a = g mod b."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    inv_lc = _inv(r0[-1])
    return [c * inv_lc for c in r0], [c * inv_lc for c in s0]


def _derivative(a):
    return _trim([k * c for k, c in enumerate(a)][1:])


class FieldTower:
    """An ordered list of simple extensions of Q.

    Each level is ``(name, modulus, hint)`` where ``modulus`` is a tuple of
    coefficients (constant term first, monic) in the tower below it.
    """

    __slots__ = ("levels", "_prefixes")

    def __init__(self, levels=()):
        self.levels = tuple(levels)
        self._prefixes = None

    @property
    def depth(self):
        return len(self.levels)

    @property
    def names(self):
        return tuple(lv[0] for lv in self.levels)

    def degree(self, level=None):
        level = self.depth if level is None else level
        return len(self.levels[level - 1][1]) - 1

    def prefix(self, k):
        if k == self.depth:
            return self
        if self._prefixes is None:
            self._prefixes = {}
        if k not in self._prefixes:
            self._prefixes[k] = FieldTower(self.levels[:k])
        return self._prefixes[k]

    def is_prefix_of(self, other):
        if self is other:
            return True
        return (self.depth <= other.depth
                and other.prefix(self.depth) == self)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldTower):
            return NotImplemented
        return self.levels == other.levels

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        if not self.levels:
            return "FieldTower(Q)"
        parts = []
        for name, mod, hint in self.levels:
            s = f"{name}: {format_upoly(mod, name)}"
            if hint is not None:
                s += f" ~ {hint}"
            parts.append(s)
        return "FieldTower(" + "; ".join(parts) + ")"

    def zero(self):
        return self.embed(0)

    def one(self):
        return self.embed(1)

    def embed(self, value):
        """Coerce ``value`` (int, Fraction, or element of a prefix tower)."""
        if self.depth == 0:
            if isinstance(value, AlgebraicElement):
                r = value.rational()
                if r is None:
                    raise TypeError(f"{value} does not lie in Q")
                return r
            if isinstance(value, Rational):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into Q")
        if isinstance(value, AlgebraicElement):
            if value.tower is self:
                return value
            if value.tower.depth == self.depth:
                if value.tower == self:
                    return value
                raise TypeError("elements belong to different towers")
            if value.tower.depth > self.depth:
                raise TypeError("cannot coerce element of a larger tower")
            if not value.tower.is_prefix_of(self):
                raise TypeError("elements belong to different towers")
        lower = self.prefix(self.depth - 1).embed(value)
        zero = self.prefix(self.depth - 1).embed(0)
        return AlgebraicElement(self, (lower,) + (zero,) * (self.degree() - 1))

    def gen(self, name=None):
        """The generator named ``name`` (default: the top one), embedded here."""
        if self.depth == 0:
            raise ValueError("Q has no generators")
        if name is None:
            level = self.depth
        else:
            try:
                level = self.names.index(name) + 1
            except ValueError:
                raise KeyError(name) from None
        sub = self.prefix(level)
        lower = sub.prefix(level - 1)
        coords = [lower.embed(0)] * sub.degree()
        if sub.degree() == 1:
            raise ValueError("degenerate level")
        coords[1] = lower.embed(1)
        return self.embed(AlgebraicElement(sub, tuple(coords)))

    def extend(self, modulus, name, hint=None):
        """Adjoin a root of ``modulus`` (coefficients, constant term first)."""
        if name in self.names:
            raise NameClash(f"generator {name!r} already declared")
        coeffs = _trim(self.embed(c) for c in modulus)
        if len(coeffs) < 3:
            raise ValueError("modulus must have degree >= 2")
        coeffs = _monic(coeffs)
        g, _ = _xgcd(coeffs, _derivative(coeffs))
        if len(g) > 1:
            raise NotSquarefree(
                f"modulus {format_upoly(coeffs, name)} is not squarefree")
        return FieldTower(self.levels + ((name, tuple(coeffs), hint),))

    def __call__(self, value):
        return self.embed(value)


QQ = FieldTower()


class AlgebraicElement:
    """An element of a :class:`FieldTower` of depth at least one."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower, coords):
        self.tower = tower
        self.coords = tuple(coords)

    # -- coercion ------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, AlgebraicElement):
            if other.tower is self.tower:
                return other
            if other.tower.depth > self.tower.depth:
                return NotImplemented
            return self.tower.embed(other)
        if isinstance(other, Rational):
            return self.tower.embed(other)
        return NotImplemented

    def _lifted(self, other):
        # Python skips the reflected method when both operands share a type,
        # so an element of a deeper tower has to be handled here.
        if isinstance(other, AlgebraicElement) and other.tower.depth > self.tower.depth:
            return other.tower.embed(self)
        return None

    def _new(self, coords):
        return AlgebraicElement(self.tower, coords)

    def _reduce(self, prod):
        mod = self.tower.levels[-1][1]
        n = len(mod) - 1
        prod = list(prod)
        for k in range(len(prod) - 1, n - 1, -1):
            c = prod[k]
            if c:
                for i in range(n):
                    if mod[i]:
                        prod[k - n + i] = prod[k - n + i] - c * mod[i]
        lower = self.tower.prefix(self.tower.depth - 1)
        out = prod[:n]
        out += [0] * (n - len(out))
        return tuple(lower.embed(c) for c in out)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        up = self._lifted(other)
        if up is not None:
            return up + other
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(a + b for a, b in zip(self.coords, other.coords))

    __radd__ = __add__

    def __neg__(self):
        return self._new(-a for a in self.coords)

    def __pos__(self):
        return self

    def __sub__(self, other):
        up = self._lifted(other)
        if up is not None:
            return up - other
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(a - b for a, b in zip(self.coords, other.coords))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                return self.tower.zero()
            return self._new(a * other for a in self.coords)
        up = self._lifted(other)
        if up is not None:
            return up * other
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coords, other.coords
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = prod[i + j] + ai * bj
        return self._new(self._reduce(prod))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; raises :class:`SplitEvent` on a zero divisor."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        level = self.tower.depth
        name, mod, _ = self.tower.levels[-1]
        g, s = _xgcd(list(self.coords), list(mod))
        if len(g) > 1:
            other, rem = _pdivmod(list(mod), g)
            assert not rem
            raise SplitEvent(level, name, (g, _monic(other)))
        return self._new(self._reduce(s))

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        up = self._lifted(other)
        if up is not None:
            return up / other
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates ----------------------------------------------------------
    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, AlgebraicElement) and other.tower.depth > self.tower.depth:
            return other == self
        try:
            other = self._coerce(other)
        except TypeError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        r = self.rational()
        if r is not None:
            return hash(r)
        return hash(self.coords)

    def rational(self):
        for c in self.coords[1:]:
            if c:
                return None
        return rational_value(self.coords[0])

    def __str__(self):
        name = self.tower.levels[-1][0]
        return format_upoly(self.coords, name)

    def __repr__(self):
        return f"AlgebraicElement({self})"


def rational_value(x):
    """The rational number equal to ``x``, or ``None`` if ``x`` is not in Q."""
    if isinstance(x, AlgebraicElement):
        return x.rational()
    return Fraction(x)


def is_positive_rational(x):
    r = rational_value(x)
    return r is not None and r > 0


def is_zero(x):
    """Exact zero test that respects dynamic evaluation.

    A structurally nonzero irrational value is inverted to make sure it is
    nonzero at every root of the moduli; a zero divisor raises SplitEvent.
    """
    if not x:
        return True
    if isinstance(x, AlgebraicElement) and x.rational() is None:
        x.inverse()
    return False


def _format_coeff(c):
    s = str(c)
    if isinstance(c, AlgebraicElement) and c.rational() is None:
        return f"({s})"
    return s


def format_upoly(coeffs, var):
    """Render coefficients (constant term first) as a polynomial in ``var``."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        r = rational_value(c) if not isinstance(c, AlgebraicElement) else c.rational()
        if not mono:
            terms.append(str(r) if r is not None else _format_coeff(c))
        elif r == 1:
            terms.append(mono)
        elif r == -1:
            terms.append("-" + mono)
        elif r is not None:
            terms.append(f"{r}*{mono}")
        else:
            terms.append(f"{_format_coeff(c)}*{mono}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out
