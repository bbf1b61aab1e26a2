"""Supports and Newton polygons of series and 1-forms."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .foliation import OneForm, is_invariant

__all__ = [
    "EmptySupport",
    "NewtonPolygon",
    "NotInvariant",
    "newton_polygon",
    "newton_second_type_test",
    "polygon_equal",
    "support_form",
    "support_poly",
]


class EmptySupport(ValueError):
    pass


class NotInvariant(ValueError):
    pass


def support_poly(f):
    return set(f.terms)


def support_form(omega):
    """sop(x A) | sop(y B)."""
    return ({(i + 1, j) for i, j in omega.A.terms}
            | {(i, j + 1) for i, j in omega.B.terms})


@dataclass(frozen=True)
class NewtonPolygon:
    """Vertices ordered by increasing i (and so decreasing j).

    ``compact_sides`` holds ``((v, w), inclination)`` with inclination the
    positive rational (w_i - v_i) / (v_j - w_j).
    """

    vertices: tuple
    compact_sides: tuple
    support: frozenset = frozenset()

    def as_json(self):
        return json.dumps([list(v) for v in self.vertices])

    def contains(self, point):
        """Whether ``point`` lies in D(T), the region above the polygon."""
        i, j = point
        vs = self.vertices
        if i < vs[0][0] or j < vs[-1][1]:
            return False
        for (a, b), (c, d) in zip(vs, vs[1:]):
            # cross product sign: point must lie on or above each edge line
            if (c - a) * (j - b) - (d - b) * (i - a) < 0:
                return False
        return True

    def render_ascii(self):
        vs = set(self.vertices)
        pts = set(self.support) | vs
        width = max(i for i, _ in pts) + 2
        height = max(j for _, j in pts) + 2
        rows = []
        for j in range(height - 1, -1, -1):
            cells = []
            for i in range(width):
                if (i, j) in vs:
                    cells.append("o")
                elif (i, j) in pts:
                    cells.append("*")
                else:
                    cells.append(".")
            rows.append(f"{j:>3} |" + " ".join(cells))
        rows.append("    +" + "-" * (2 * width - 1))
        rows.append("     " + " ".join(str(i % 10) for i in range(width)))
        return "\n".join(rows)

    def render_svg(self, cell=20):
        vs = list(self.vertices)
        pts = sorted(set(self.support) | set(vs))
        width = max(i for i, _ in pts) + 2
        height = max(j for _, j in pts) + 2
        W, H = (width + 1) * cell, (height + 1) * cell

        def X(i):
            return (i + 1) * cell

        def Y(j):
            return H - (j + 1) * cell

        out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
               f'viewBox="0 0 {W} {H}">']
        for i in range(width + 1):
            out.append(f'<line x1="{X(i)}" y1="{Y(0)}" x2="{X(i)}" y2="{Y(height)}" '
                       'stroke="#ddd" stroke-width="1"/>')
        for j in range(height + 1):
            out.append(f'<line x1="{X(0)}" y1="{Y(j)}" x2="{X(width)}" y2="{Y(j)}" '
                       'stroke="#ddd" stroke-width="1"/>')
        out.append(f'<line x1="{X(0)}" y1="{Y(0)}" x2="{X(width)}" y2="{Y(0)}" stroke="black"/>')
        out.append(f'<line x1="{X(0)}" y1="{Y(0)}" x2="{X(0)}" y2="{Y(height)}" stroke="black"/>')
        # boundary: vertical ray, compact sides, horizontal ray
        path = [(vs[0][0], height)] + vs + [(width, vs[-1][1])]
        d = " ".join(f"{X(i)},{Y(j)}" for i, j in path)
        out.append(f'<polyline points="{d}" fill="none" stroke="#1f4e9c" stroke-width="2"/>')
        for i, j in pts:
            out.append(f'<circle cx="{X(i)}" cy="{Y(j)}" r="3" fill="black"/>')
        for i, j in vs:
            out.append(f'<circle cx="{X(i)}" cy="{Y(j)}" r="6" fill="none" '
                       'stroke="#c0392b" stroke-width="2"/>')
        out.append("</svg>")
        return "\n".join(out)


def _staircase(points):
    best = {}
    for i, j in points:
        if i not in best or j < best[i]:
            best[i] = j
    stair = []
    for i in sorted(best):
        if not stair or best[i] < stair[-1][1]:
            stair.append((i, best[i]))
    return stair


def newton_polygon(T):
    T = {(int(i), int(j)) for i, j in T}
    if not T:
        raise EmptySupport("Newton polygon of an empty support")
    hull = []
    for p in _staircase(T):
        while len(hull) >= 2:
            (a, b), (c, d) = hull[-2], hull[-1]
            # drop the middle point unless the turn is strictly convex
            if (c - a) * (p[1] - b) - (d - b) * (p[0] - a) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    sides = tuple(((v, w), Fraction(w[0] - v[0], v[1] - w[1]))
                  for v, w in zip(hull, hull[1:]))
    return NewtonPolygon(tuple(hull), sides, frozenset(T))


def polygon_equal(P1, P2):
    return P1.vertices == P2.vertices


def newton_second_type_test(omega, f):
    """Compare N(omega) with N(df) for a separatrix union f.

    ``f`` is taken to be a reduced equation of the full union of
    separatrices; only its invariance can be checked here.
    """
    ok, _ = is_invariant(omega, f)
    if not ok:
        raise NotInvariant(f"{f} = 0 is not invariant by the form")
    return polygon_equal(newton_polygon(support_form(omega)),
                         newton_polygon(support_form(OneForm.exact(f))))
