"""The cuspidal family d(y^p - x^q) + Delta (p x dy - q y dx).

Intersection numbers are computed twice: by substituting the branch
parameterizations of y^p - x^q and by the general local intersection
algorithm. The toric chart x = u^n v^(p/d), y = u^m v^(q/d) gives a second,
independent look at the singularities after resolution of the cusp.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .foliation import (
    SADDLE_NODE, NotSaturated, OneForm, classify_singularity, is_invariant,
)
from .numfield import QQ, SplitEvent, is_zero
from .polyring import (
    INF, Parameterization, Poly1, Poly2, intersection_number, poly_gcd, substitute,
)
from .reduction import (
    DEFAULT_MAX_DEPTH, Chart, Dicritical, SingularityRecord, _tangency, _visit_points,
    reduce, same_foliation_reduction, tower_of, verdict,
)

__all__ = [
    "CuspidalSpec",
    "OracleMismatch",
    "ToricChart",
    "UndefinedIndex",
    "Verdict",
    "branch_params",
    "branches",
    "build_cuspidal",
    "classify_cuspidal",
    "cusp_gsv",
    "cusp_intersection",
    "gsv_total",
    "ph_pq",
    "pullback_order",
    "saddle_node_normal_form",
    "toric_pullback",
]

INTERSECTION_CRITERION = "intersection-criterion"
REDUCTION_ORACLE = "reduction-oracle"
GSV = "gsv"


class OracleMismatch(RuntimeError):
    """Two independent computations disagreed."""


class UndefinedIndex(ValueError):
    pass


def _check_pq(p, q):
    for name, v in (("p", p), ("q", q)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class CuspidalSpec:
    p: int
    q: int
    delta: Poly2 = field(default_factory=Poly2)

    def __post_init__(self):
        _check_pq(self.p, self.q)
        if not isinstance(self.delta, Poly2):
            raise TypeError("delta must be a Poly2")

    @property
    def d(self):
        return gcd(self.p, self.q)

    @property
    def separatrix(self):
        return Poly2.y() ** self.p - Poly2.x() ** self.q


def _jsonable(v):
    if v == INF:
        return "inf"
    return v


@dataclass(frozen=True)
class Verdict:
    second_type: bool
    generalized_curve: bool | None
    intersection: object
    ph: int
    method: str = INTERSECTION_CRITERION
    same_reduction: bool | None = None

    def to_dict(self):
        out = {
            "second_type": self.second_type,
            "generalized_curve": self.generalized_curve,
            "intersection": _jsonable(self.intersection),
            "ph": self.ph,
            "method": self.method,
        }
        if self.same_reduction is not None:
            out["same_reduction"] = self.same_reduction
        return out


def build_cuspidal(spec):
    p, q, delta = spec.p, spec.q, spec.delta
    x, y = Poly2.x(), Poly2.y()
    A = x ** (q - 1) * (-q) - y * delta * q
    B = y ** (p - 1) * p + x * delta * p
    if A and B and poly_gcd(A, B).degree() > 0:
        raise NotSaturated(f"the coefficients of the form for {spec} share a factor")
    return OneForm(A, B)


def ph_pq(p, q):
    _check_pq(p, q)
    return (p - 1) * (q - 1)


# -- branches of y^p - x^q -----------------------------------------------------

def _cyclotomic(n):
    phi = Poly1({n: 1, 0: -1})
    for k in range(1, n):
        if n % k == 0:
            phi = phi // _cyclotomic(k)
    return phi


def _fresh_name(tower, base="eta"):
    name = base
    while name in tower.names:
        name += "_"
    return name


def _with_primitive_root(base, n, fn):
    """Call ``fn(eta)`` with eta a primitive n-th root of unity over ``base``.

    If the cyclotomic polynomial turns out to be reducible over ``base`` the
    computation is restarted with a factor; every factor works because all of
    its roots are primitive.
    """
    modulus = _cyclotomic(n)
    while True:
        if modulus.degree() == 1:
            return fn(-modulus.terms.get(0, 0) / modulus.leading())
        tower = base.extend(modulus.coeffs(), _fresh_name(base))
        try:
            return fn(tower.gen())
        except SplitEvent as exc:
            if exc.level != tower.depth or exc.name != tower.names[-1]:
                raise
            modulus = Poly1.from_coeffs(exc.factors[0])


def _branch_list(p, q, eta):
    d = gcd(p, q)
    p1, q1 = p // d, q // d
    t = Poly1({1: 1})
    x, y = Poly2.x(), Poly2.y()
    if d == 1:
        return [(Poly2.y() ** p - Poly2.x() ** q, Parameterization(t ** p, t ** q))]
    out = []
    for i in range(1, d + 1):
        a_i = eta ** i
        zeta_i = eta ** (i * p1)
        fi = y ** p1 - x ** q1 * zeta_i
        out.append((fi, Parameterization(t ** p1, t ** q1 * a_i)))
    return out


def branches(p, q, base=QQ):
    """Pairs (f_i, gamma_i): irreducible factors of y^p - x^q and their arcs.

    The arcs live over ``base`` extended by a primitive p-th root of unity
    when gcd(p, q) > 1.
    """
    _check_pq(p, q)
    if gcd(p, q) == 1:
        return _branch_list(p, q, None)
    return _with_primitive_root(base, p, lambda eta: _branch_list(p, q, eta))


def branch_params(p, q, base=QQ):
    return [g for _, g in branches(p, q, base)]


def _on_branches(spec, fn):
    if spec.d == 1:
        return fn(_branch_list(spec.p, spec.q, None))
    base = tower_of(spec.delta)
    return _with_primitive_root(base, spec.p,
                                lambda eta: fn(_branch_list(spec.p, spec.q, eta)))


def cusp_intersection(spec):
    """(Delta, y^p - x^q) at the origin, checked against the general algorithm."""
    if not spec.delta:
        return INF

    def branch_sum(brs):
        total = 0
        for _, g in brs:
            total += substitute(spec.delta, g).order()
        return total

    by_branches = _on_branches(spec, branch_sum)
    direct = intersection_number(spec.delta, spec.separatrix)
    if by_branches != direct:
        raise OracleMismatch(
            f"branch substitution gives {by_branches}, intersection algorithm gives {direct}")
    return by_branches


def classify_cuspidal(spec, use_reduction_oracle=False, max_depth=DEFAULT_MAX_DEPTH):
    omega = build_cuspidal(spec)
    ok, _ = is_invariant(omega, spec.separatrix)
    if not ok:
        raise OracleMismatch("y^p - x^q is not invariant by the built form")
    ph = ph_pq(spec.p, spec.q)
    inter = cusp_intersection(spec)
    if inter == INF:
        second, general = True, True
    else:
        second = inter >= ph - 1
        if inter > ph - 1:
            general = True
        elif spec.d == 1 or not second:
            general = False
        else:
            general = None
    if not use_reduction_oracle:
        return Verdict(second, general, inter, ph)
    tree = reduce(omega, max_depth)
    if tree.dicritical:
        raise Dicritical(tree.dicritical_at)
    v = verdict(tree)
    if v.second_type != second or (general is not None and v.generalized_curve != general):
        raise OracleMismatch(
            f"reduction gives {v}, intersection criterion gives "
            f"second_type={second}, generalized_curve={general}")
    # compare with the reduction of d(y^p - x^q) itself
    same = same_foliation_reduction(omega, OneForm.exact(spec.separatrix), max_depth)
    if same != second:
        raise OracleMismatch(f"same_reduction={same} but second_type={second}")
    return Verdict(second, v.generalized_curve, inter, ph, REDUCTION_ORACLE, same)


# -- GSV index -----------------------------------------------------------------

def _branch_index(omega, fi, gamma):
    fy = substitute(fi.diff_y(), gamma)
    if fy:
        num, den = substitute(omega.B, gamma), fy
    else:
        fx = substitute(fi.diff_x(), gamma)
        if not fx:
            raise UndefinedIndex(f"both partials of {fi} vanish along the branch")
        num, den = substitute(omega.A, gamma), fx
    top = num.order()
    if top == INF:
        raise UndefinedIndex(f"the form vanishes along the branch {fi} = 0")
    return top - den.order()


def gsv_total(omega, f, branch_list):
    """Sum of per-branch indices minus twice the pairwise intersections.

    ``branch_list`` holds ``(f_i, gamma_i)`` with f the product of the f_i.
    """
    prod = Poly2.const(1)
    for fi, _ in branch_list:
        prod = prod * fi
    if prod.normalized() != f.normalized():
        raise ValueError("f is not the product of the branch equations")
    total = sum(_branch_index(omega, fi, g) for fi, g in branch_list)
    for i in range(len(branch_list)):
        for j in range(i + 1, len(branch_list)):
            total -= 2 * intersection_number(branch_list[i][0], branch_list[j][0])
    return total


def cusp_gsv(spec):
    """Per-branch indices, pairwise intersections and the total GSV index."""
    omega = build_cuspidal(spec)

    def compute(brs):
        per = [_branch_index(omega, fi, g) for fi, g in brs]
        pairs = [intersection_number(brs[i][0], brs[j][0])
                 for i in range(len(brs)) for j in range(i + 1, len(brs))]
        return {
            "branches": per,
            "pairs": pairs,
            "total": gsv_total(omega, spec.separatrix, brs),
        }

    return _on_branches(spec, compute)


# -- arcs ----------------------------------------------------------------------

def pullback_order(gamma, omega):
    """ord_t of gamma^* omega; infinite exactly along invariant arcs."""
    dx, dy = gamma.derivative()
    return (substitute(omega.A, gamma) * dx + substitute(omega.B, gamma) * dy).order()


def saddle_node_normal_form(p, lam=0):
    """x (1 + lam y^p) dy - y^(p+1) dx, whose separatrices are x y = 0."""
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise ValueError("p must be a positive integer")
    x, y = Poly2.x(), Poly2.y()
    return OneForm(-(y ** (p + 1)), x * (Poly2.const(1) + y ** p * lam))


# -- toric chart ---------------------------------------------------------------

def _toric_exponents(p1, q1):
    if q1 == 1:
        m = 1
    else:
        m = pow(p1, -1, q1)
    n = (m * p1 - 1) // q1
    while n < 1:
        m += q1
        n += p1
    return m, n


@dataclass(frozen=True)
class ToricChart:
    """Pullback by x = u^n v^(p/d), y = u^m v^(q/d) with (u, v) stored as (x, y).

    ``records`` classifies the singular points on v = 0; ``case_split`` holds,
    for each record off u = 0, whether Delta~ takes the value -d there.
    Unpacks as ``(form, records)``.
    """

    form: OneForm
    records: tuple
    m: int
    n: int
    swapped: bool
    divided_by: tuple
    delta_tilde: Poly2 | None
    case_split: tuple = ()

    def __iter__(self):
        return iter((self.form, self.records))


class _ToricAdapter:
    def __init__(self, omega):
        self.omega = omega

    def restrict(self):
        a = self.omega.A.restrict_y0("u")
        b = self.omega.B.restrict_y0("u")
        if not a:
            return b
        if not b:
            return a
        return a.gcd(b)

    def at(self, value):
        return self.omega.translate_x(value), value

    def polys(self):
        return (self.omega.A, self.omega.B)


def toric_pullback(spec):
    p, q, delta = spec.p, spec.q, spec.delta
    swapped = p < q
    if swapped:
        # the family is symmetric up to sign under x <-> y
        p, q, delta = q, p, delta.swap()
    if p == q:
        raise ValueError("the toric chart needs p != q")
    d = gcd(p, q)
    p1, q1 = p // d, q // d
    m, n = _toric_exponents(p1, q1)
    omega = build_cuspidal(CuspidalSpec(p, q, delta))
    X = Poly2.monomial(n, p1)
    Y = Poly2.monomial(m, q1)
    AE, BE = omega.A.compose(X, Y), omega.B.compose(X, Y)
    P = AE * X.diff_x() + BE * Y.diff_x()
    Q = AE * X.diff_y() + BE * Y.diff_y()
    (a1, b1), (a2, b2) = P.monomial_content(), Q.monomial_content()
    if not P:
        a1, b1 = a2, b2
    if not Q:
        a2, b2 = a1, b1
    a, b = min(a1, a2), min(b1, b2)
    form = OneForm(P.shift_divide(a, b), Q.shift_divide(a, b))

    eu, ev = m + n - n * q, p1 + q1 - p * q1
    scaled = delta.compose(X, Y) * d
    if all(i + eu >= 0 and j + ev >= 0 for i, j in scaled.terms):
        dtilde = Poly2({(i + eu, j + ev): c for (i, j), c in scaled.terms.items()})
    else:
        dtilde = None

    split = []

    def visit(pair, chart, depth, weight):
        local, value = pair
        cls = classify_singularity(local)
        if cls.tag == "Regular":
            return [], []
        tangency = _tangency(cls, chart.divisor_branches) if cls.tag == SADDLE_NODE else None
        rec = SingularityRecord(chart, chart.path[-1], cls, weight, tangency)
        if value and dtilde is not None:
            predicted = is_zero(dtilde.evaluate(value, 0) + d)
            if predicted != (cls.tag == SADDLE_NODE):
                raise OracleMismatch(f"case split disagrees with classification at {rec.point}")
            split.append((rec.point, predicted))
        return [], [rec]

    def branches_for(value):
        return ("x=0", "y=0") if not value else ("y=0",)

    records = []
    if form.A.restrict_y0() or form.B.restrict_y0():
        _, records = _visit_points(_ToricAdapter(form), Chart(), 1, 1, "E",
                                   branches_for, visit, coord="u")
    return ToricChart(form, tuple(records), m, n, swapped, (a, b), dtilde, tuple(split))

