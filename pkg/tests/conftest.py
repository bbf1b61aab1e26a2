import pytest

from secondtype.formparse import ParseContext, parse_oneform, parse_poly

TANGENT_SN = "(x*y + y^2) dx - x^2 dy"
THREE_LINES = "((b-1)*x*y - y^3) dx + (x*y - b*x^2 + x*y^2) dy"


def x_axis_form(n):
    return parse_oneform(f"({n}*y + x^{n}) dx - x dy")


@pytest.fixture
def sqrt2():
    return ParseContext().declare("b: b^2 - 2 ~ 1.414")


@pytest.fixture
def tangent_sn():
    return parse_oneform(TANGENT_SN)


@pytest.fixture
def three_lines(sqrt2):
    return parse_oneform(THREE_LINES, sqrt2)


@pytest.fixture
def P():
    return parse_poly
