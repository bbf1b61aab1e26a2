"""Blow-ups and reduction of singularities.

Every point that is not reduced is blown up; the process records each
center by its chart path from the origin. In the first chart (x, t) with
y = t x the divisor is {x = 0} and all its finite points are owned there;
the second chart (s, y) with x = s y only contributes its origin s = 0.
Local coordinates are always renamed to (x, y) so forms stay Poly2-valued.

Points on the divisor whose coordinate is not in the current tower are
handled as a cluster: the squarefree polynomial that cuts them out is
adjoined as a new level, and a SplitEvent on that level forks the analysis
into the two factors.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .foliation import (
    SADDLE_NODE, NotSaturated, OneForm, SingularityClass, classify_singularity,
    is_saturated, multiplicity,
)
from .numfield import QQ, AlgebraicElement, SplitEvent, format_upoly, is_zero, rational_value
from .polyring import Poly1, Poly2, total_order

__all__ = [
    "BlowupResult",
    "Center",
    "Chart",
    "DepthExceeded",
    "Dicritical",
    "ReductionTree",
    "SingularityRecord",
    "Truncated",
    "Verdict",
    "blowup",
    "curve_centers",
    "divisor_points",
    "reduce",
    "same_foliation_reduction",
    "same_reduction",
    "verdict",
]

DEFAULT_MAX_DEPTH = 30
TANGENT = "Tangent"
TRANSVERSE = "Transverse"


class Dicritical(Exception):
    def __init__(self, path=()):
        where = " / ".join(path) or "origin"
        super().__init__(f"dicritical blow-up at {where}")
        self.path = tuple(path)


class DepthExceeded(Exception):
    pass


class Truncated(ValueError):
    pass


@dataclass(frozen=True)
class Chart:
    path: tuple = ()
    divisor_branches: tuple = ()

    def child(self, step, branches):
        return Chart(self.path + (step,), tuple(sorted(branches)))

    @property
    def on_corner(self):
        return len(self.divisor_branches) == 2


@dataclass(frozen=True)
class Center:
    chart: Chart
    multiplicity: int = 1

    @property
    def key(self):
        return self.chart.path


@dataclass(frozen=True)
class SingularityRecord:
    chart: Chart
    point: str
    cls: SingularityClass
    multiplicity: int = 1
    saddle_node_tangency: str | None = None

    @property
    def on_corner(self):
        return self.chart.on_corner

    def describe(self):
        out = {
            "chart": list(self.chart.path),
            "point": self.point,
            "divisor_branches": list(self.chart.divisor_branches),
            "on_corner": self.on_corner,
            "multiplicity": self.multiplicity,
            "class": self.cls.describe(),
        }
        if self.saddle_node_tangency:
            out["saddle_node_tangency"] = self.saddle_node_tangency
        return out


@dataclass(frozen=True)
class ReductionTree:
    root: OneForm
    centers: tuple = ()
    leaves: tuple = ()
    dicritical: bool = False
    dicritical_at: tuple | None = None

    @property
    def blowup_count(self):
        return sum(c.multiplicity for c in self.centers)

    def saddle_nodes(self):
        return [leaf for leaf in self.leaves if leaf.cls.tag == SADDLE_NODE]

    def to_dict(self):
        out = {
            "schema": 1,
            "form": str(self.root),
            "dicritical": self.dicritical,
            "blowups": self.blowup_count,
            "centers": [{"chart": list(c.chart.path), "multiplicity": c.multiplicity}
                        for c in self.centers],
            "leaves": [leaf.describe() for leaf in self.leaves],
        }
        if self.dicritical:
            out["dicritical_at"] = list(self.dicritical_at)
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_dot(self):
        ids = {}

        def node(path):
            if path not in ids:
                ids[path] = f"n{len(ids)}"
            return ids[path]

        lines = ["digraph reduction {", '  node [fontname="Helvetica"];']
        for c in self.centers:
            label = c.chart.path[-1] if c.chart.path else "origin"
            if c.multiplicity > 1:
                label += f" (x{c.multiplicity})"
            lines.append(f'  {node(c.chart.path)} [shape=box, label="{_esc(label)}\\nblow-up"];')
        for leaf in self.leaves:
            path = leaf.chart.path
            label = (path[-1] if path else "origin") + "\\n" + leaf.cls.tag
            if leaf.cls.eigenvalues is not None:
                label += " (" + ", ".join(str(e) for e in leaf.cls.eigenvalues) + ")"
            if leaf.saddle_node_tangency:
                label += "\\n" + leaf.saddle_node_tangency
            attrs = ""
            if leaf.saddle_node_tangency == TANGENT:
                attrs = ', style=filled, fillcolor="#e74c3c"'
            elif leaf.saddle_node_tangency == TRANSVERSE:
                attrs = ', style=filled, fillcolor="#f5b041"'
            lines.append(f'  {node(path)} [shape=ellipse, label="{_esc(label)}"{attrs}];')
        for path in list(ids):
            if path:
                lines.append(f"  {node(path[:-1])} -> {ids[path]};")
        lines.append("}")
        return "\n".join(lines)


def _esc(s):
    return s.replace('"', '\\"')


@dataclass(frozen=True)
class BlowupResult:
    chart1: OneForm
    chart2: OneForm
    exceptional_exponent: int
    dicritical: bool


def blowup(omega):
    """Pull back by the point blow-up and divide out the divisor.

    Chart 1 is (x, y) -> (x, x y), chart 2 is (x, y) -> (x y, y); the
    results are written in the local coordinates of each chart.
    """
    nu = multiplicity(omega)
    A, B = omega.A, omega.B
    x, y = Poly2.x(), Poly2.y()
    A1, B1 = A.pullback_chart1(), B.pullback_chart1()
    A2, B2 = A.pullback_chart2(), B.pullback_chart2()
    dicritical = not (x * A.homogeneous_part(nu) + y * B.homogeneous_part(nu))
    e = nu + 1 if dicritical else nu
    chart1 = OneForm((A1 + y * B1).shift_divide(e, 0), (x * B1).shift_divide(e, 0))
    chart2 = OneForm((y * A2).shift_divide(0, e), (x * A2 + B2).shift_divide(0, e))
    return BlowupResult(chart1, chart2, e, dicritical)


# -- points on the divisor ---------------------------------------------------

def tower_of(*polys):
    best = QQ
    for p in polys:
        for c in p.terms.values():
            if isinstance(c, AlgebraicElement) and c.tower.depth > best.depth:
                best = c.tower
    return best


def _divisors(n):
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _rational_roots(h):
    coeffs = [rational_value(c) for c in h.coeffs()]
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    lead, const = ints[-1], ints[0]
    roots = set()
    for p in _divisors(const):
        for q in _divisors(lead):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if not h(r):
                    roots.add(r)
    return sorted(roots)


def divisor_points(h):
    """Split the zeros of h into explicit roots and clusters.

    Returns a list of ``(value, None)`` for roots in the coefficient tower
    and ``(None, modulus)`` for a monic squarefree factor of degree >= 2 with
    no root found. Zero comes first, then rational roots in increasing order.
    """
    if not h:
        raise ValueError("the divisor is not invariant")
    if h.degree() <= 0:
        return []
    h = h.squarefree_part()
    t = Poly1({1: 1}, h.var)
    out = []
    if is_zero(h.terms.get(0, 0)):
        out.append((Fraction(0), None))
        h = h // t
    if all(rational_value(c) is not None for c in h.terms.values()) and h.degree() > 0:
        h = Poly1({k: rational_value(c) for k, c in h.terms.items()}, h.var)
        for r in _rational_roots(h):
            out.append((r, None))
            h = h // (t - r)
    if h.degree() == 1:
        out.append((-h.terms.get(0, 0) / h.leading(), None))
    elif h.degree() >= 2:
        out.append((None, h.monic()))
    return out


# -- foliation reduction -----------------------------------------------------

@dataclass
class _Run:
    max_depth: int
    centers: list = field(default_factory=list)
    leaves: list = field(default_factory=list)


def _tangency(cls, branches):
    w = cls.weak_direction
    for br in branches:
        if br == "x=0" and is_zero(w[0]):
            return TANGENT
        if br == "y=0" and is_zero(w[1]):
            return TANGENT
    return TRANSVERSE


def _cluster_name(tower, depth, coord="t"):
    name = f"r{depth}" if coord == "t" else f"{coord}{depth}"
    while name in tower.names:
        name += "_"
    return name


def _visit_points(form, chart, depth, weight, step_prefix, branches_for, visit, coord="t"):
    """Run ``visit`` at every zero of the chart-1 divisor polynomial."""
    h = form.restrict()
    out = ([], [])
    for value, modulus in divisor_points(h):
        if modulus is None:
            sub = visit(form.at(value), chart.child(f"{step_prefix}({coord}={value})",
                                                     branches_for(value)),
                        depth, weight)
        else:
            sub = _visit_cluster(form, modulus, chart, depth, weight, step_prefix,
                                 branches_for, visit, coord)
        out[0].extend(sub[0])
        out[1].extend(sub[1])
    return out


def _visit_cluster(form, modulus, chart, depth, weight, step_prefix, branches_for, visit,
                   coord="t"):
    base = tower_of(*form.polys(), Poly2({(k, 0): c for k, c in modulus.terms.items()}))
    name = _cluster_name(base, depth, coord)
    tower = base.extend(modulus.coeffs(), name)
    theta = tower.gen()
    label = f"{name}: {format_upoly(modulus.coeffs(), name)}"
    try:
        return visit(form.at(theta), chart.child(f"{step_prefix}({coord}={label})",
                                                 branches_for(theta)),
                     depth, weight * modulus.degree())
    except SplitEvent as exc:
        if exc.name != name or exc.level != tower.depth:
            raise
        factors = exc.factors
    out = ([], [])
    for factor in factors:
        f = Poly1.from_coeffs(factor, modulus.var)
        if f.degree() == 1:
            root = -f.terms.get(0, 0) / f.leading()
            sub = visit(form.at(root), chart.child(f"{step_prefix}({coord}={root})",
                                                   branches_for(root)),
                        depth, weight)
        else:
            sub = _visit_cluster(form, f, chart, depth, weight, step_prefix,
                                 branches_for, visit, coord)
        out[0].extend(sub[0])
        out[1].extend(sub[1])
    return out


class _FormAdapter:
    """Uniform access to the chart-1 divisor polynomial and translations."""

    def __init__(self, omega):
        self.omega = omega

    def restrict(self):
        return self.omega.A.restrict_x0("t")

    def at(self, value):
        return self.omega.translate_y(value)

    def polys(self):
        return (self.omega.A, self.omega.B)


def _reduce_visit(run):
    def visit(omega, chart, depth, weight):
        cls = classify_singularity(omega)
        if cls.tag == "Regular":
            return [], []
        point = chart.path[-1] if chart.path else "origin"
        if cls.reduced:
            tangency = _tangency(cls, chart.divisor_branches) if cls.tag == SADDLE_NODE else None
            return [], [SingularityRecord(chart, point, cls, weight, tangency)]
        if depth >= run.max_depth:
            raise DepthExceeded(f"reduction exceeded max_depth={run.max_depth}")
        bu = blowup(omega)
        if bu.dicritical:
            raise Dicritical(chart.path)
        centers = [Center(chart, weight)]
        leaves = []
        old = chart.divisor_branches

        def branches_for(value):
            if not value and "y=0" in old:
                return ("x=0", "y=0")
            return ("x=0",)

        c, lv = _visit_points(_FormAdapter(bu.chart1), chart, depth + 1, weight,
                              "C1", branches_for, visit)
        centers += c
        leaves += lv
        if bu.chart2.is_singular():
            branches = ("y=0", "x=0") if "x=0" in old else ("y=0",)
            c, lv = visit(bu.chart2, chart.child("C2(s=0)", branches), depth + 1, weight)
            centers += c
            leaves += lv
        return centers, leaves

    return visit


def reduce(omega, max_depth=DEFAULT_MAX_DEPTH):
    """Reduce the singularity of ``omega`` at the origin by point blow-ups.

    A dicritical blow-up stops the process; the returned tree then has
    ``dicritical=True`` and no verdict can be drawn from it.
    """
    if not is_saturated(omega):
        raise NotSaturated(f"{omega} has a common factor; saturate it first")
    run = _Run(max_depth)
    visit = _reduce_visit(run)
    root = Chart()
    if not omega.is_singular():
        return ReductionTree(omega, (), (SingularityRecord(root, "origin", classify_singularity(omega)),))
    try:
        centers, leaves = visit(omega, root, 0, 1)
    except Dicritical as exc:
        return ReductionTree(omega, dicritical=True, dicritical_at=exc.path)
    return ReductionTree(omega, tuple(centers), tuple(leaves))


@dataclass(frozen=True)
class Verdict:
    second_type: bool
    generalized_curve: bool


def verdict(tree):
    if tree.dicritical:
        raise Truncated("the reduction stopped at a dicritical blow-up")
    sn = tree.saddle_nodes()
    return Verdict(
        second_type=not any(s.saddle_node_tangency == TANGENT for s in sn),
        generalized_curve=not sn,
    )


# -- curve resolution --------------------------------------------------------

class _CurveAdapter:
    def __init__(self, f):
        self.f = f

    def restrict(self):
        return self.f.restrict_x0("t")

    def at(self, value):
        return self.f.translate_y(value)

    def polys(self):
        return (self.f,)


def _curve_visit(max_depth):
    def visit(g, chart, depth, weight):
        if not is_zero(g.constant_term()):
            return [], []
        m = total_order(g)
        branches = chart.divisor_branches
        if m == 1:
            a, b = g.coeff(1, 0), g.coeff(0, 1)
            tangent = (("x=0" in branches and is_zero(b))
                       or ("y=0" in branches and is_zero(a)))
            if not tangent and len(branches) < 2:
                return [], []
        if depth >= max_depth:
            raise DepthExceeded(f"resolution exceeded max_depth={max_depth}")
        g1 = g.pullback_chart1().shift_divide(m, 0)
        g2 = g.pullback_chart2().shift_divide(0, m)
        centers = [Center(chart, weight)]

        def branches_for(value):
            if not value and "y=0" in branches:
                return ("x=0", "y=0")
            return ("x=0",)

        c, _ = _visit_points(_CurveAdapter(g1), chart, depth + 1, weight,
                             "C1", branches_for, visit)
        centers += c
        if is_zero(g2.constant_term()):
            br = ("y=0", "x=0") if "x=0" in branches else ("y=0",)
            c, _ = visit(g2, chart.child("C2(s=0)", br), depth + 1, weight)
            centers += c
        return centers, []

    return visit


def curve_centers(f, max_depth=DEFAULT_MAX_DEPTH):
    """Centers of the minimal embedded resolution of f = 0 at the origin."""
    if not is_zero(f.constant_term()):
        return ()
    centers, _ = _curve_visit(max_depth)(f, Chart(), 0, 1)
    return tuple(centers)


def same_reduction(omega, f, max_depth=DEFAULT_MAX_DEPTH):
    """Whether the foliation and the curve f = 0 blow up the same centers."""
    fol = _center_counts(reduce(omega, max_depth))
    cur = Counter((c.key, c.multiplicity) for c in curve_centers(f, max_depth))
    return fol == cur


def _center_counts(tree):
    if tree.dicritical:
        raise Dicritical(tree.dicritical_at)
    return Counter((c.key, c.multiplicity) for c in tree.centers)


def same_foliation_reduction(omega1, omega2, max_depth=DEFAULT_MAX_DEPTH):
    """Whether two foliations are reduced by the same blow-up centers."""
    return (_center_counts(reduce(omega1, max_depth))
            == _center_counts(reduce(omega2, max_depth)))
