# tests/test_linsneto.py
import random

import pytest

from folpol.core.exceptions import ExcludedParameter, InvalidInput
from folpol.linsneto.eisenstein import UNITS, EisensteinInt, gcd, reduce_ratio
from folpol.linsneto.pencil import J, is_excluded, pencil_degree, radial_local_terms


def test_eisenstein_arithmetic():
    a = EisensteinInt(2, 1)
    assert a * a == EisensteinInt(3, 3)
    assert J ** 3 == EisensteinInt(1)
    assert J * J == EisensteinInt(-1, -1)
    assert a.norm() == 3
    assert a.conjugate() == EisensteinInt(1, -1)
    assert (a * a.conjugate()) == EisensteinInt(a.norm())
    assert all(u.is_unit() for u in UNITS)
    assert str(EisensteinInt(1, -1)) == "1 - j"
    assert str(EisensteinInt(0, 2)) == "2j"


def test_division_with_small_remainder():
    rng = random.Random(11)
    for _ in range(50):
        x = EisensteinInt(rng.randint(-40, 40), rng.randint(-40, 40))
        y = EisensteinInt(rng.randint(-9, 9), rng.randint(-9, 9))
        if y.is_zero():
            continue
        q, r = divmod(x, y)
        assert q * y + r == x
        assert 4 * r.norm() <= 3 * y.norm()


def test_gcd_and_ratio():
    assert gcd(3, EisensteinInt(2, 1)).norm() == 3
    num, den = reduce_ratio(EisensteinInt(4, 2), EisensteinInt(2, 1))
    assert den.is_unit()
    assert reduce_ratio(5, 0) == (EisensteinInt(1), EisensteinInt(0))
    with pytest.raises(ZeroDivisionError):
        divmod(EisensteinInt(1), 0)


@pytest.mark.parametrize(
    "numerator,denominator,norms,d0",
    [
        (2, 1, [4, 1, 1, 3], 9),
        (3, 1, [9, 1, 4, 7], 21),
        (0, 1, [0, 1, 1, 1], 3),
    ],
)
def test_pencil_degree(numerator, denominator, norms, d0):
    record = pencil_degree(numerator, denominator)
    assert record["norms"] == norms
    assert record["d0"] == record["d0_radicand"] == record["d0_norms"] == d0


def test_pencil_degree_at_two():
    assert pencil_degree(2)["radicand"] == 36


@pytest.mark.parametrize(
    "numerator,denominator",
    [(1, 1), (J, 1), (J * J, 1), (1, 0), (2, 2), (EisensteinInt(-1, -1), 1)],
)
def test_excluded_parameters(numerator, denominator):
    with pytest.raises(ExcludedParameter):
        pencil_degree(numerator, denominator)


def test_two_routes_agree_on_random_parameters():
    rng = random.Random(0)
    checked = 0
    while checked < 20:
        num = EisensteinInt(rng.randint(-12, 12), rng.randint(-12, 12))
        den = EisensteinInt(rng.randint(-6, 6), rng.randint(-6, 6))
        if den.is_zero() or is_excluded(*reduce_ratio(num, den)):
            continue
        record = pencil_degree(num, den)
        assert record["d0_radicand"] == record["d0_norms"]
        norms = record["norms"]
        assert sum(norms) ** 2 == 3 * sum(n * n for n in norms)
        checked += 1


@pytest.mark.parametrize("n,expected", [(1, -1), (2, 0), (3, 3), (4, 8), (5, 15)])
def test_radial_local_terms(n, expected):
    record = radial_local_terms(n)
    assert record["closed_form"] == record["engine"] == expected


def test_radial_local_terms_needs_a_branch():
    with pytest.raises(InvalidInput):
        radial_local_terms(0)
