"""Input checks shared by the estimator layer."""
from __future__ import annotations

from .cuspidal import CuspidalSpec
from .foliation import OneForm
from .formparse import ParseContext, parse_oneform, parse_poly
from .polyring import Poly2


def check_context(declarations=()):
    """A ParseContext with the given ``"name: minpoly [~ hint]"`` declarations."""
    if isinstance(declarations, str):
        declarations = [declarations]
    ctx = ParseContext()
    for decl in declarations:
        ctx = ctx.declare(decl)
    return ctx


def check_forms(X, ctx=None):
    """Coerce a sequence of OneForm objects or form strings to OneForms."""
    if isinstance(X, (str, OneForm)):
        raise TypeError("expected a sequence of forms, got a single form")
    ctx = ctx or ParseContext()
    out = []
    for k, item in enumerate(X):
        if isinstance(item, OneForm):
            out.append(item)
        elif isinstance(item, str):
            out.append(parse_oneform(item, ctx))
        else:
            raise TypeError(f"item {k}: expected OneForm or str, got {type(item).__name__}")
    if not out:
        raise ValueError("empty input")
    return out


def check_specs(X, ctx=None):
    """Coerce ``(p, q, delta)`` triples (delta as Poly2 or text) or CuspidalSpecs."""
    ctx = ctx or ParseContext()
    out = []
    for k, item in enumerate(X):
        if isinstance(item, CuspidalSpec):
            out.append(item)
            continue
        try:
            p, q, delta = item
        except (TypeError, ValueError):
            raise TypeError(f"item {k}: expected (p, q, delta)") from None
        if isinstance(delta, str):
            delta = parse_poly(delta, ctx)
        elif not isinstance(delta, Poly2):
            raise TypeError(f"item {k}: delta must be Poly2 or str")
        out.append(CuspidalSpec(int(p), int(q), delta))
    if not out:
        raise ValueError("empty input")
    return out


def check_max_depth(value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f"max_depth must be a positive integer, got {value!r}")
    return value
