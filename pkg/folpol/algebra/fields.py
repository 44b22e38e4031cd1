# folpol/algebra/fields.py
"""
Coefficient Fields - The rationals and one optional quadratic extension
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional

import structlog
import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from folpol.core.exceptions import NeedsAlgebraicExtension

logger = structlog.get_logger("fields")

_RADICANDS: Dict[Any, int] = {}


@lru_cache(maxsize=None)
def quadratic_field(radicand: int):
    """
    Q(sqrt(radicand)) for a squarefree integer radicand.

    Args:
        radicand: Squarefree integer different from 0 and 1

    Returns:
        sympy AlgebraicField
    """
    K = QQ.algebraic_field(sympy.sqrt(radicand))
    _RADICANDS[K] = radicand
    logger.debug("quadratic_field_created", radicand=radicand)
    return K


def radicand_of(K) -> Optional[int]:
    """Radicand of a field built by quadratic_field, None for the rationals."""
    if K == QQ:
        return None
    return _RADICANDS.get(K)


def field_label(K) -> str:
    k = radicand_of(K)
    return "QQ" if k is None else f"QQ<sqrt({k})>"


def element(K, value: Any):
    """Convert an int, Fraction, sympy number or domain element into K."""
    if isinstance(value, Fraction):
        value = sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, (int, sympy.Basic)):
        return K.from_sympy(sympy.sympify(value))
    return K.convert(value)


def to_rational(K, c) -> Optional[sympy.Rational]:
    """The rational value of c, or None when c is irrational."""
    expr = K.to_sympy(c)
    return expr if expr.is_Rational else None


def squarefree_radicand(value: Any) -> Optional[int]:
    """
    Squarefree integer k such that sqrt(value) lies in Q(sqrt(k)).

    Returns None when value is the square of a rational.
    """
    expr = sympy.sqrt(sympy.Rational(value))
    if expr.is_Rational:
        return None
    _, rest = expr.as_coeff_Mul()
    return int(rest ** 2)


def rational_sqrt(value: Any) -> Optional[sympy.Rational]:
    """Square root of a rational when it is rational, else None."""
    expr = sympy.sqrt(sympy.Rational(value))
    return expr if expr.is_Rational else None


def extend_for(K, radicand: int):
    """
    Field to restart a computation in after an extension request.

    Raises:
        NeedsAlgebraicExtension: If K is already a different extension
    """
    current = radicand_of(K)
    if current is None and K == QQ:
        return quadratic_field(radicand)
    raise NeedsAlgebraicExtension(
        f"second quadratic extension sqrt({radicand}) over {field_label(K)}",
        field=field_label(K),
    )


def _is_rational_poly(poly: PolyElement) -> bool:
    K = poly.ring.domain
    if K == QQ:
        return True
    return all(to_rational(K, c) is not None for c in poly.itercoeffs())


def _coeff(poly: PolyElement, k: int):
    return poly.get((k,), poly.ring.domain.zero)


def roots_in_field(poly: PolyElement, K=None) -> List[Any]:
    """
    Distinct roots of a univariate polynomial, as elements of K.

    Factors over the rationals when all coefficients are rational; an
    irreducible quadratic factor is solved inside K when K contains its
    square root. Anything else is reported as an extension request.

    Args:
        poly: Univariate PolyElement
        K: Target field (defaults to the polynomial's domain)

    Returns:
        List of roots in K

    Raises:
        NeedsAlgebraicExtension: If a root lies outside K
    """
    K = K or poly.ring.domain
    if poly.is_ground:
        return []

    if _is_rational_poly(poly):
        qring = poly.ring.clone(domain=QQ)
        qpoly = qring.from_dict(
            {m: QQ.convert(to_rational(poly.ring.domain, c)) for m, c in poly.iterterms()}
        )
        return _rational_factor_roots(qpoly, K)

    roots = []
    _, factors = poly.set_ring(poly.ring.clone(domain=K)).factor_list()
    for factor, _mult in factors:
        if factor.degree() == 1:
            roots.append(K.quo(-_coeff(factor, 0), _coeff(factor, 1)))
        else:
            raise NeedsAlgebraicExtension(
                f"irreducible factor of degree {factor.degree()} over {field_label(K)}",
                field=field_label(K),
                cluster=str(factor.as_expr()),
            )
    return roots


def _rational_factor_roots(qpoly: PolyElement, K) -> List[Any]:
    roots: List[Any] = []
    _, factors = qpoly.factor_list()
    for factor, _mult in factors:
        deg = factor.degree()
        if deg == 1:
            root = QQ.quo(-_coeff(factor, 0), _coeff(factor, 1))
            roots.append(K.convert_from(root, QQ))
        elif deg == 2:
            a, b, c = _coeff(factor, 2), _coeff(factor, 1), _coeff(factor, 0)
            disc = QQ.to_sympy(b * b - 4 * a * c)
            radicand = squarefree_radicand(disc)
            if radicand is None or radicand_of(K) != radicand:
                if K == QQ:
                    raise NeedsAlgebraicExtension(
                        f"roots of {factor.as_expr()}",
                        radicand=radicand,
                        field=field_label(K),
                        cluster=str(factor.as_expr()),
                    )
                raise NeedsAlgebraicExtension(
                    f"roots of {factor.as_expr()} outside {field_label(K)}",
                    field=field_label(K),
                    cluster=str(factor.as_expr()),
                )
            root_disc = K.from_sympy(sympy.sqrt(disc))
            two_a = K.convert_from(2 * a, QQ)
            minus_b = K.convert_from(-b, QQ)
            roots.append(K.quo(minus_b + root_disc, two_a))
            roots.append(K.quo(minus_b - root_disc, two_a))
        else:
            raise NeedsAlgebraicExtension(
                f"irreducible factor of degree {deg} over QQ",
                field=field_label(K),
                cluster=str(factor.as_expr()),
            )
    return roots


def format_element(K, c) -> str:
    """Readable string of a field element."""
    return str(K.to_sympy(c))
