"""Plane 1-forms A dx + B dy viewed as germs of foliations at the origin."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .numfield import is_zero, rational_value
from .polyring import Poly2, intersection_number, poly_gcd, total_order

__all__ = [
    "NotSaturated",
    "OneForm",
    "SingularityClass",
    "ZeroForm",
    "classify_singularity",
    "is_invariant",
    "is_saturated",
    "milnor_number",
    "multiplicity",
    "ph_index",
    "saturate",
]

REGULAR = "Regular"
NONDEGENERATE = "ReducedNonDegenerate"
SADDLE_NODE = "SaddleNode"
NON_REDUCED = "NonReduced"


class ZeroForm(ValueError):
    pass


class NotSaturated(ValueError):
    pass


@dataclass(frozen=True)
class OneForm:
    A: Poly2
    B: Poly2

    def __post_init__(self):
        if not self.A and not self.B:
            raise ZeroForm("the zero 1-form does not define a foliation")

    @classmethod
    def exact(cls, f):
        """The differential df."""
        return cls(f.diff_x(), f.diff_y())

    def __str__(self):
        return f"({self.A}) dx + ({self.B}) dy"

    def is_singular(self):
        return is_zero(self.A.constant_term()) and is_zero(self.B.constant_term())

    def scaled(self, c):
        return OneForm(self.A * c, self.B * c)

    def swap(self):
        """Pull back along (x, y) -> (y, x)."""
        return OneForm(self.B.swap(), self.A.swap())

    def translate_y(self, c):
        return OneForm(self.A.translate_y(c), self.B.translate_y(c))

    def translate_x(self, c):
        return self.swap().translate_y(c).swap()

    def linear_part(self):
        """Matrix of the linear part of the dual field B d/dx - A d/dy."""
        A, B = self.A, self.B
        return ((B.coeff(1, 0), B.coeff(0, 1)),
                (-A.coeff(1, 0), -A.coeff(0, 1)))


def saturate(A, B):
    if not A and not B:
        raise ZeroForm("both coefficients vanish")
    g = poly_gcd(A, B)
    if g.degree() <= 0:
        return OneForm(A, B)
    return OneForm(A // g, B // g)


def is_saturated(omega):
    A, B = omega.A, omega.B
    if not A or not B:
        return (A or B).degree() == 0
    return poly_gcd(A, B).degree() <= 0


def multiplicity(omega):
    return min(total_order(omega.A), total_order(omega.B))


def is_invariant(omega, f):
    """Whether f = 0 is invariant, i.e. f divides A f_y - B f_x.

    Returns ``(True, cofactor)`` or ``(False, None)``.
    """
    if not f:
        raise ValueError("f must be nonzero")
    w = omega.A * f.diff_y() - omega.B * f.diff_x()
    q, r = divmod(w, f)
    if r:
        return False, None
    return True, q


def milnor_number(f):
    return intersection_number(f.diff_x(), f.diff_y())


def ph_index(omega):
    return intersection_number(omega.A, omega.B)


@dataclass(frozen=True)
class SingularityClass:
    """Classification of the point at the origin.

    ``eigenvalues`` is ``None`` when they do not lie in the coefficient
    tower; ``trace`` and ``det`` of the linear part are always recorded.
    For saddle-nodes the nonzero eigenvalue comes first and
    ``weak_direction`` spans the kernel of the linear part.
    """

    tag: str
    subtag: str | None = None
    eigenvalues: tuple | None = None
    trace: object = None
    det: object = None
    weak_direction: tuple | None = None

    @property
    def reduced(self):
        return self.tag in (NONDEGENERATE, SADDLE_NODE)

    def describe(self):
        out = {"tag": self.tag}
        if self.subtag:
            out["subtag"] = self.subtag
        if self.eigenvalues is not None:
            out["eigenvalues"] = [str(e) for e in self.eigenvalues]
        if self.trace is not None:
            out["trace"] = str(self.trace)
            out["det"] = str(self.det)
        if self.weak_direction is not None:
            out["weak_direction"] = [str(w) for w in self.weak_direction]
        return out


def _rational_sqrt(r):
    if r < 0:
        return None
    n, d = r.numerator, r.denominator
    sn, sd = isqrt(n), isqrt(d)
    if sn * sn == n and sd * sd == d:
        return Fraction(sn, sd)
    return None


def _eigenvalues(m, tr, det):
    (a, b), (c, d) = m
    if is_zero(b) or is_zero(c):
        return (a, d)
    disc = rational_value(tr * tr - 4 * det)
    if disc is not None:
        s = _rational_sqrt(disc)
        if s is not None:
            return ((tr + s) / 2, (tr - s) / 2)
    return None


def ratio_in_positive_rationals(tr, det):
    """Whether lambda/mu lies in Q+ for the eigenvalues of a matrix with
    the given trace and (nonzero) determinant.

    r = lambda/mu solves r^2 + (2 - s) r + 1 = 0 with s = tr^2/det, so the
    ratio is rational iff s is rational and s(s - 4) is a rational square.
    Both roots share a sign, which is the sign of s - 2.
    """
    s = rational_value(tr * tr / det)
    if s is None:
        return False
    root = _rational_sqrt(s * (s - 4))
    if root is None:
        return False
    return s - 2 > 0


def _kernel(m):
    (a, b), (c, d) = m
    if not is_zero(a) or not is_zero(b):
        return (b, -a)
    return (d, -c)


def classify_singularity(omega):
    if not omega.is_singular():
        return SingularityClass(REGULAR)
    m = omega.linear_part()
    (a, b), (c, d) = m
    tr = a + d
    det = a * d - b * c
    if all(is_zero(e) for e in (a, b, c, d)):
        return SingularityClass(NON_REDUCED, "zero-linear-part",
                                eigenvalues=(Fraction(0), Fraction(0)),
                                trace=tr, det=det)
    if is_zero(det):
        if is_zero(tr):
            return SingularityClass(NON_REDUCED, "nilpotent",
                                    eigenvalues=(Fraction(0), Fraction(0)),
                                    trace=tr, det=det)
        return SingularityClass(SADDLE_NODE, eigenvalues=(tr, Fraction(0)),
                                trace=tr, det=det, weak_direction=_kernel(m))
    eig = _eigenvalues(m, tr, det)
    if ratio_in_positive_rationals(tr, det):
        return SingularityClass(NON_REDUCED, "resonant-ratio", eigenvalues=eig,
                                trace=tr, det=det)
    return SingularityClass(NONDEGENERATE, eigenvalues=eig, trace=tr, det=det)

