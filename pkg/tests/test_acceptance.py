"""The ten acceptance criteria, one test each.

Every test prints a single ``AC<n> PASS`` or ``AC<n> FAIL`` line to the
terminal, even under output capture.
"""
import random
import time

import pytest

from secondtype.cli import run
from secondtype.cuspidal import (
    CuspidalSpec, build_cuspidal, branches, classify_cuspidal, cusp_gsv, cusp_intersection,
    gsv_total, ph_pq, pullback_order, saddle_node_normal_form, toric_pullback,
)
from secondtype.foliation import (
    NotSaturated, OneForm, is_invariant, milnor_number, multiplicity, ph_index,
)
from secondtype.formparse import ParseContext, parse_oneform, parse_poly as P
from secondtype.newton import (
    newton_polygon, newton_second_type_test, polygon_equal, support_form,
)
from secondtype.polyring import INF, Parameterization, Poly1, intersection_number
from secondtype.reduction import reduce, same_reduction, verdict

from conftest import TANGENT_SN, THREE_LINES, x_axis_form

SQRT2 = ParseContext().declare("b: b^2 - 2 ~ 1.414")


def cusp(p, q, delta="0"):
    return CuspidalSpec(p, q, P(delta, SQRT2))


def ac1():
    w = parse_oneform(TANGENT_SN)
    assert support_form(w) == {(2, 1), (1, 2)}
    assert support_form(OneForm.exact(P("x*y"))) == {(1, 1)}
    assert newton_second_type_test(w, P("x*y")) is False
    tree = reduce(w)
    assert tree.blowup_count == 1
    kinds = sorted((leaf.cls.tag, leaf.saddle_node_tangency) for leaf in tree.leaves)
    assert kinds == [("ReducedNonDegenerate", None), ("SaddleNode", "Tangent")]
    v = verdict(tree)
    assert (v.second_type, v.generalized_curve) == (False, False)
    assert same_reduction(w, P("x*y")) is True
    return "1 blow-up, tangent saddle-node, verdict (false, false)"


def ac2():
    w = parse_oneform(THREE_LINES, SQRT2)
    N = newton_polygon(support_form(w))
    assert N.vertices == ((1, 2), (2, 1))
    assert polygon_equal(N, newton_polygon(support_form(OneForm.exact(P("x*y*(x - y)")))))
    tree = reduce(w)
    assert tree.blowup_count == 1 and len(tree.leaves) == 3
    sn = tree.saddle_nodes()
    assert len(sn) == 1 and sn[0].saddle_node_tangency == "Transverse"
    v = verdict(tree)
    assert (v.second_type, v.generalized_curve) == (True, False)
    return "1 blow-up, 3 points, one transverse saddle-node, verdict (true, false)"


def ac3():
    dx = newton_polygon(support_form(parse_oneform("dx")))
    for n in (1, 2, 3):
        w = x_axis_form(n)
        assert support_form(w) == {(1, 1), (n + 1, 0)}
        assert not polygon_equal(newton_polygon(support_form(w)), dx)
        assert newton_second_type_test(w, P("x")) is False
        assert verdict(reduce(w)).second_type is False
    return "n = 1, 2, 3 not second type by both paths"


def ac4():
    assert ph_pq(2, 3) == 2 and ph_pq(6, 3) == 10
    assert cusp_intersection(cusp(6, 3, "x*y")) == 9 == ph_pq(6, 3) - 1
    assert cusp_intersection(cusp(2, 3, "y")) == 3 > ph_pq(2, 3) - 1
    assert cusp_intersection(cusp(2, 3)) == INF and cusp_intersection(cusp(6, 3)) == INF
    s = cusp(6, 3, "x*y")
    assert classify_cuspidal(s).second_type is True
    assert same_reduction(build_cuspidal(s), s.separatrix) is True
    v = classify_cuspidal(cusp(2, 3, "y"), use_reduction_oracle=True)
    assert v.generalized_curve is True and v.method == "reduction-oracle"
    assert not reduce(build_cuspidal(cusp(2, 3, "y"))).saddle_nodes()
    return "PH 2/10, intersections 9, 3, inf; (6,3,xy) same reduction; (2,3,y) saddle-node free"


def ac5():
    chart = toric_pullback(cusp(6, 3, "x*y"))
    at = {r.point: r for r in chart.records}
    assert at["E(u=0)"].cls.eigenvalues == (-6, 3)
    checked = 0
    for delta in ("x*y", "0", "x*y - 2*y^3 + x^2*y", "x*y - 2*y^3 + x^2",
                  "x*y - 2*y^3 + y^4", "x^2*y", "2*x*y"):
        chart = toric_pullback(cusp(6, 3, delta))  # raises on a case-split disagreement
        at = {r.point: r for r in chart.records}
        assert at["E(u=0)"].cls.eigenvalues == (-6, 3)
        assert len(chart.case_split) == 2
        for point, saddle in chart.case_split:
            assert saddle == (at[point].cls.tag == "SaddleNode")
            checked += 1
    return f"eigenvalues (-6, 3); {checked} points on u^3 = 1 match the case split"


def ac6_corpus():
    deltas = ["x*y", "y", "x", "1", "x^2 + y", "y^2 - x", "x*y^2 + 3*x^3", "b*x + y^2",
              "x^2*y - y^4", "0"]
    pairs = [(p, q) for p in range(2, 8) for q in range(2, p + 1)]  # 21 pairs
    return [(*pairs[k % len(pairs)], deltas[(3 * k + k // len(pairs)) % len(deltas)])
            for k in range(30)]


def ac6():
    corpus = ac6_corpus()
    assert len(corpus) == 30
    finite = 0
    for p, q, delta in corpus:
        s = cusp(p, q, delta)
        value = cusp_intersection(s)  # branch substitution, cross-checked internally
        assert value == intersection_number(s.delta, s.separatrix)
        finite += value != INF
    return f"30 cases agree ({finite} finite)"


def _ms_fixtures():
    out = [
        (parse_oneform(TANGENT_SN), P("x*y")),
        (parse_oneform(THREE_LINES, SQRT2), P("x*y*(x - y)")),
    ]
    out += [(x_axis_form(n), P("x")) for n in (1, 2, 3)]
    out += [(saddle_node_normal_form(p, lam), P("x*y")) for p, lam in ((1, 0), (2, 3), (3, -1))]
    for p, q, delta in [(2, 3, "y"), (6, 3, "x*y"), (6, 3, "x*y - 2*y^3 + x^2*y"),
                        (3, 2, "x"), (4, 2, "x + y"), (5, 3, "x*y")]:
        s = cusp(p, q, delta)
        out.append((build_cuspidal(s), s.separatrix))
    return out


def ac7():
    count = seconds = 0
    for w, f in _ms_fixtures():
        assert is_invariant(w, f)[0]
        tree = reduce(w)
        if tree.dicritical:
            continue
        m, mf = multiplicity(w), multiplicity(OneForm.exact(f))
        assert m >= mf
        assert (m == mf) == verdict(tree).second_type, (w, f)
        count += 1
        seconds += m == mf
    assert count >= 12
    return f"{count} fixtures, {seconds} second type with equal multiplicity"


def _random_arc(rng):
    def series():
        return Poly1({k: rng.randint(-4, 4) for k in range(1, 4)})

    while True:
        g = Parameterization(series(), series())
        if g.x_of_t or g.y_of_t:
            return g


def ac8():
    fixtures = [(parse_oneform(THREE_LINES, SQRT2), P("x*y*(x - y)"))]
    for a in ("x*y", "2*x*y", "x*y + x^2*y", "x^2*y"):
        s = cusp(6, 3, a)
        fixtures.append((build_cuspidal(s), s.separatrix))
    fixtures += [(saddle_node_normal_form(p), P("x*y")) for p in (1, 2)]
    rng = random.Random(43)
    compared = 0
    for w, f in fixtures:
        assert verdict(reduce(w)).second_type
        df = OneForm.exact(f)
        for _ in range(100):
            g = _random_arc(rng)
            a, b = pullback_order(g, w), pullback_order(g, df)
            if a != INF and b != INF:
                assert a == b, (w, g, a, b)
                compared += 1
    return f"{len(fixtures)} fixtures x 100 arcs, {compared} finite comparisons agree"


def ac9():
    deltas = ["y", "x", "1 + x", "x*y", "y^2", "x^2 + y^2", "x^3", "3*y + x^2", "0"]
    pairs = [(3, 2), (2, 3), (5, 2), (4, 3), (5, 3), (3, 4), (7, 2), (5, 4)]
    seen = gc = 0
    for p, q in pairs:
        for delta in deltas:
            s = cusp(p, q, delta)
            try:
                w = build_cuspidal(s)
            except NotSaturated:
                continue
            tree = reduce(w)
            if tree.dicritical:
                continue
            brs = branches(p, q)
            total = gsv_total(w, s.separatrix, brs)
            assert total == cusp_gsv(s)["total"]
            assert (total == 0) == verdict(tree).generalized_curve, (p, q, delta)
            seen += 1
            gc += total == 0
    assert seen >= 40
    assert cusp_gsv(cusp(2, 3, "1"))["branches"] == [-1]
    return f"{seen} non-dicritical fixtures, {gc} with zero GSV; (2,3,1) branch value -1"


QUASI_HOMOGENEOUS = ["y^2 - x^3", "y^3 - x^4", "y^5 - x^2", "x^3 + y^3", "x^2*y + y^4",
                     "x^3 + x*y^3", "x^2*y - y^5", "x^4 + y^4", "y^7 - x^3", "x*y"]


def ac10():
    rng = random.Random(10)
    for _ in range(500):
        T = {(rng.randint(0, 15), rng.randint(0, 15)) for _ in range(rng.randint(1, 12))}
        N = newton_polygon(T)
        assert set(N.vertices) <= T and all(N.contains(pt) for pt in T)
        M = newton_polygon(set(N.vertices))
        assert polygon_equal(M, N) and M.compact_sides == N.compact_sides
    for text in QUASI_HOMOGENEOUS:
        f = P(text)
        assert ph_index(OneForm.exact(f)) == milnor_number(f)
    argv = ["reduce", "--form", THREE_LINES, "--alg", "b: b^2 - 2 ~ 1.414"]
    assert run(argv) == run(argv)
    a = reduce(parse_oneform(THREE_LINES, SQRT2)).to_json()
    assert a == reduce(parse_oneform(THREE_LINES, SQRT2)).to_json()
    c = run(["cuspidal", "--p", "6", "--q", "3", "--delta", "x*y", "--oracle"])
    assert c == run(["cuspidal", "--p", "6", "--q", "3", "--delta", "x*y", "--oracle"])
    return "500 supports, 10 quasi-homogeneous curves, byte-identical JSON"


CRITERIA = [ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"AC{k}" for k in range(1, 11)])
def test_criterion(check, capsys):
    name = check.__name__.upper()
    start = time.perf_counter()
    try:
        detail = check()
    except BaseException as exc:
        with capsys.disabled():
            print(f"\n{name} FAIL: {type(exc).__name__}: {exc}")
        raise
    with capsys.disabled():
        print(f"\n{name} PASS ({time.perf_counter() - start:.2f}s): {detail}")
