# tests/test_parser.py
import random

import pytest
from sympy.polys.domains import QQ

from folpol.algebra.poly import format_poly
from folpol.core.exceptions import ParseError
from folpol.linsneto.eisenstein import EisensteinInt
from folpol.utils.parser import parse_alpha, parse_form, parse_poly


def test_radial_form(xy):
    x, y = xy
    w = parse_form("x dy - y dx")
    assert (w.a, w.b) == (-y, x)


@pytest.mark.parametrize(
    "text",
    ["2*y dx - 3*x*dy", "2y dx - 3x dy", "- 3x dy + 2*y*dx", "2 y dx − 3 x dy"],
)
def test_equivalent_spellings(xy, text):
    x, y = xy
    w = parse_form(text)
    assert (w.a, w.b) == (2 * y, -3 * x)


def test_parenthesized_coefficients_and_powers(xy):
    x, y = xy
    w = parse_form("(x - y) dx + x^2 dy")
    assert (w.a, w.b) == (x - y, x ** 2)
    assert parse_form("x**2 dy").b == x ** 2


def test_repeated_differentials_add_up(xy):
    x, y = xy
    w = parse_form("x dx + y dx - dy")
    assert w.a == x + y
    assert w.b == -1


def test_rational_coefficients(xy):
    x, y = xy
    assert parse_poly("1/2 x^2 - 3/4*y") == x ** 2 * QQ(1, 2) - y * QQ(3, 4)


@pytest.mark.parametrize("text", ["y^2 - x^3", "x*y*(x - y)", "3/2*x^2*y - y^5 + 7", "(1 - y^2)*x"])
def test_printer_output_parses_back(text):
    p = parse_poly(text)
    assert parse_poly(format_poly(p)) == p


def test_error_column():
    with pytest.raises(ParseError) as info:
        parse_form("x dy + + y")
    assert info.value.details["column"] == 8
    assert info.value.details["line"] == 1
    assert info.value.exit_code == 2


@pytest.mark.parametrize("text", ["x dy +", "x dz", "x +* y", "(x dy", ""])
def test_malformed_forms(text):
    with pytest.raises(ParseError):
        parse_form(text)


def test_zero_denominator():
    with pytest.raises(ParseError):
        parse_poly("x + 1/0")


def test_alpha():
    assert parse_alpha("2") == (EisensteinInt(2), EisensteinInt(1))
    assert parse_alpha("(1 + j)/2") == (EisensteinInt(1, 1), EisensteinInt(2))
    assert parse_alpha("3 - 2j") == (EisensteinInt(3, -2), EisensteinInt(1))


def test_printer_output_parses_back_on_random_polynomials(R):
    x, y = R.gens
    rng = random.Random(99)
    checked = 0
    while checked < 50:
        p = R.zero
        for _ in range(rng.randint(1, 6)):
            coeff = QQ(rng.randint(-9, 9), rng.randint(1, 5))
            p += x ** rng.randint(0, 5) * y ** rng.randint(0, 5) * coeff
        if not p:
            continue
        assert parse_poly(format_poly(p)) == p
        checked += 1
