# tests/conftest.py
"""
Shared fixtures: quiet logging, the rational polynomial ring and parser shortcuts
"""

import pytest
from sympy.polys.domains import QQ

from folpol.algebra.poly import poly_ring
from folpol.core.logging_config import setup_logging
from folpol.utils.parser import parse_form, parse_poly


@pytest.fixture(scope="session", autouse=True)
def quiet_logging():
    setup_logging("WARNING")


@pytest.fixture
def R():
    return poly_ring(QQ)


@pytest.fixture
def xy(R):
    return R.gens


@pytest.fixture
def form():
    return parse_form


@pytest.fixture
def curve():
    return parse_poly
