# tests/test_algebra.py
import math
import random

import pytest
from sympy.polys.domains import QQ

from folpol.algebra.fields import field_label, quadratic_field, roots_in_field
from folpol.algebra.intersection import (
    branch_intersection,
    branch_milnor,
    intersection_number,
    noether_intersection,
)
from folpol.algebra.poly import deflate, format_poly, initial_form, line_ring, order
from folpol.algebra.puiseux import branch_tangent, newton_puiseux
from folpol.algebra.series import PuiseuxSeries
from folpol.algebra.truncation import adaptive, over_fields
from folpol.core.exceptions import (
    CeilingExceeded,
    NeedsAlgebraicExtension,
    NotSquareFree,
    TruncationInsufficient,
)


def test_roots_of_split_quadratic():
    U = line_ring(QQ, "s")
    (s,) = U.gens
    assert sorted(roots_in_field(s ** 2 - s * 3 + 2)) == [1, 2]


def test_irrational_root_asks_for_extension():
    U = line_ring(QQ, "s")
    (s,) = U.gens
    with pytest.raises(NeedsAlgebraicExtension) as info:
        roots_in_field(s ** 2 + s + 1)
    assert info.value.radicand == -3


def test_roots_found_after_extension():
    K = quadratic_field(-3)
    U = line_ring(QQ, "s")
    (s,) = U.gens
    assert len(roots_in_field(s ** 2 + s + 1, K)) == 2
    assert field_label(K) == "QQ<sqrt(-3)>"


def test_order_and_initial_form(xy):
    x, y = xy
    p = y ** 2 - x ** 3 + x * y ** 3
    assert order(p) == 2
    assert initial_form(p) == y ** 2


def test_format_poly_uses_input_grammar(xy):
    x, y = xy
    assert format_poly(x ** 2 - y ** 3 * QQ(3, 2)) == "x^2 - 3/2*y^3"


def test_deflate_removes_common_factor(xy):
    x, y = xy
    a, b, g = deflate(x * y, x * x)
    assert g == x
    assert (a, b) == (y, x)


def test_series_product():
    s = PuiseuxSeries.from_coeffs({0: 1, 1: 1}, 6)
    square = s * s
    assert square.coeff(1) == 2
    assert square.coeff(2) == 1
    assert square.coeff(3) == 0


def test_cusp_is_one_branch_of_multiplicity_two(xy):
    x, y = xy
    (branch,) = newton_puiseux(y ** 2 - x ** 3, 16)
    assert branch.multiplicity == 2


def test_three_lines_give_three_smooth_branches(xy):
    x, y = xy
    branches = newton_puiseux(x * y * (x - y), 12)
    assert len(branches) == 3
    assert all(b.multiplicity == 1 for b in branches)
    tangents = [branch_tangent(b) for b in branches]
    assert sorted(t[1] for t in tangents if t[0] == "X") == [0, 1]
    assert ("Y", None) in tangents


def test_repeated_factor_is_rejected(xy):
    x, y = xy
    with pytest.raises(NotSquareFree):
        newton_puiseux((y - x) ** 2 * (y + x), 12)


def test_intersection_numbers(xy):
    x, y = xy
    cusp = y ** 2 - x ** 3
    assert intersection_number(cusp, y) == 3
    assert intersection_number(cusp, x) == 2
    assert intersection_number(cusp, y ** 2 - x ** 5, method="both") == 6
    assert intersection_number(x * y, x) == math.inf


def test_branch_routes_agree(xy):
    x, y = xy
    (cusp,) = newton_puiseux(y ** 2 - x ** 3, 24)
    (line,) = newton_puiseux(y, 24)
    assert branch_intersection(cusp, line) == 3
    assert noether_intersection(cusp, line) == 3
    assert branch_milnor(cusp) == 2


def test_adaptive_doubles_until_success():
    seen = []

    def fn(n):
        seen.append(n)
        if n < 20:
            raise TruncationInsufficient(n, "test")
        return n

    assert adaptive(fn, start=5, ceiling=64) == 20
    assert seen == [5, 10, 20]


def test_adaptive_stops_at_ceiling():
    def fn(n):
        raise TruncationInsufficient(n)

    with pytest.raises(CeilingExceeded):
        adaptive(fn, start=8, ceiling=16)


def test_over_fields_restarts_once():
    calls = []

    def fn(K):
        calls.append(field_label(K))
        if K == QQ:
            raise NeedsAlgebraicExtension("test", radicand=5)
        return field_label(K)

    assert over_fields(fn) == "QQ<sqrt(5)>"
    assert calls == ["QQ", "QQ<sqrt(5)>"]


def _factor_pool(rng, xy, size):
    """Distinct irreducible curves through the origin with rational tangents."""
    x, y = xy
    seen = set()
    pool = []
    while len(pool) < size:
        kind, a, b = rng.randrange(3), rng.randint(-4, 4), rng.randint(1, 3)
        if (kind, a, b) in seen:
            continue
        seen.add((kind, a, b))
        if kind == 0:
            pool.append(y - x * a - x ** 2 * b)
        elif kind == 1:
            pool.append(x - y ** 2 * a - y ** 3 * b)
        else:
            pool.append((y - x * a) ** 2 - x ** 3 * b ** 2)
    return pool


def _product(factors):
    result = factors[0]
    for factor in factors[1:]:
        result = result * factor
    return result


def test_random_intersections_are_symmetric_and_additive(xy):
    rng = random.Random(2024)
    for _ in range(50):
        pool = _factor_pool(rng, xy, 5)
        f, g, h = _product(pool[:2]), pool[2], _product(pool[3:])
        fg = intersection_number(f, g, method="both")
        fh = intersection_number(f, h, method="both")
        assert fg == intersection_number(g, f) < math.inf
        assert fh == intersection_number(h, f)
        assert intersection_number(f, g * h) == fg + fh
