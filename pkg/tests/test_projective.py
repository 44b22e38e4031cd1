# tests/test_projective.py
from fractions import Fraction

import pytest
from sympy.polys.domains import QQ

from folpol.algebra.poly import poly_ring
from folpol.algebra.truncation import over_fields
from folpol.core.exceptions import InvalidInput, NotInvariant
from folpol.projective.foliation import (
    ProjectiveCurve,
    ProjectiveFoliation,
    bezout_check,
    curve_from_chart,
    degree_of,
    dicritical_pencil,
    from_chart,
    is_invariant,
    lins_neto,
    singular_locus,
)
from folpol.projective.poincare import brunella_identity, fan_out, poincare_bound

SEED = 3
PENCILS = [(1, 2), (2, 3), (2, 5), (3, 5)]


def _proportional(F: ProjectiveFoliation, G: ProjectiveFoliation) -> bool:
    return not (F.a * G.b - F.b * G.a)


@pytest.mark.parametrize("p,q", PENCILS)
def test_pencil_degree_and_bezout(p, q):
    F, S = dicritical_pencil(p, q)
    assert F.degree == 1
    assert degree_of(F, SEED) == 1
    assert is_invariant(F, S)
    report = bezout_check(F)
    assert report["milnor_sum"] == report["expected"] == 3
    assert report["holds"]


def test_pencil_singular_points():
    F, _ = dicritical_pencil(2, 3)
    points = singular_locus(F)
    assert [p.chart for p in points] == ["z", "x", "y"]
    assert [p.label for p in points] == ["p1", "p2", "p3"]
    assert points[0].to_dict()["point"] == "[0 : 0 : 1]"
    assert points[1].to_dict()["point"] == "[1 : 0 : 0]"
    assert points[2].to_dict()["point"] == "[0 : 1 : 0]"


def test_pencil_rejects_bad_exponents():
    with pytest.raises(InvalidInput):
        dicritical_pencil(3, 2)


@pytest.mark.parametrize("p,q", PENCILS)
def test_pencil_poincare_equality(p, q):
    F, S = dicritical_pencil(p, q)
    report = poincare_bound(F, S, seed=SEED)
    corrections = {row["point"]["point"]: row["correction"] for row in report["points"]}
    assert corrections == {"[0 : 0 : 1]": p * q - p - q, "[1 : 0 : 0]": q * q - q * p - 2 * q + p}
    assert report["bound_rhs"] == q == report["d0"]
    assert report["equality"]
    assert report["all_generalized_curve"]


def test_radial_plane_with_a_line():
    R = poly_ring(QQ)
    x, y = R.gens
    F = ProjectiveFoliation(-y, x, label="radial")
    S = ProjectiveCurve(x)
    assert F.degree == 0
    bound = poincare_bound(F, S, seed=SEED)
    assert bound["correction_sum"] == -1
    assert bound["bound_rhs"] == 1
    brunella = brunella_identity(F, S, seed=SEED)
    assert brunella["gsv_sum"] == brunella["expected"] == 1


def test_brunella_on_pencil():
    F, S = dicritical_pencil(1, 2)
    report = brunella_identity(F, S, seed=SEED, workers=2)
    assert report["expected"] == (1 + 2 - 2) * 2
    assert report["holds"]


def test_non_invariant_curve_is_rejected():
    F, _ = dicritical_pencil(2, 3)
    R = poly_ring(QQ)
    x, y = R.gens
    with pytest.raises(NotInvariant):
        poincare_bound(F, ProjectiveCurve(x - y), seed=SEED)


@pytest.mark.parametrize("chart", ["z", "x", "y"])
def test_chart_round_trip(chart):
    F, S = dicritical_pencil(2, 3)
    G = from_chart(F.chart_form(chart), chart)
    assert _proportional(F, G)
    back = curve_from_chart(S.in_chart(chart), chart)
    assert not (back.equation * S.equation.LC - S.equation * back.equation.LC)


def test_chart_x_form_of_pencil():
    R = poly_ring(QQ)
    x, y = R.gens
    from folpol.foliation.forms import OneForm

    G = from_chart(OneForm(-3 * y, x), "x")
    assert _proportional(G, ProjectiveFoliation(2 * y, -3 * x))


def test_fan_out_keeps_order():
    assert fan_out(lambda n: n * n, [1, 2, 3, 4], workers=3) == [1, 4, 9, 16]
    assert fan_out(lambda n: n + 1, [5], workers=4) == [6]


@pytest.mark.slow
def test_lins_neto_member_has_21_points():
    def check(K):
        F = lins_neto(Fraction(0)).to_field(K)
        return F.degree, bezout_check(F)

    degree, report = over_fields(check)
    assert degree == 4
    assert len(report["points"]) == 21
    assert report["milnor_sum"] == 21
    assert report["holds"]


@pytest.mark.slow
def test_lins_neto_rational_member():
    F = lins_neto("1/2")
    assert F.degree == 4
    assert degree_of(F, SEED) == 4
