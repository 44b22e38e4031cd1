# folpol/utils/parser.py
"""
Expression Parser - Forms, curves and pencil parameters from text
"""

from functools import lru_cache
from typing import Any, Callable, List, Tuple

import structlog
from pyparsing import (
    Forward,
    Literal,
    Opt,
    ParseBaseException,
    ParseFatalException,
    ParserElement,
    Regex,
    Suppress,
    ZeroOrMore,
    one_of,
)
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from folpol.algebra.poly import poly_ring
from folpol.core.exceptions import ParseError
from folpol.foliation.forms import OneForm
from folpol.linsneto.eisenstein import EisensteinInt
from folpol.utils.text_utils import normalize_expression

logger = structlog.get_logger("parser")

ParserElement.enable_packrat()


class _Value:
    """Holds a parsed value; pyparsing would unpack a PolyElement (a dict) into its items."""

    __slots__ = ("value",)

    def __init__(self, value: Any):
        self.value = value


class _Differential:
    __slots__ = ("coefficient", "axis")

    def __init__(self, coefficient: Any, axis: str):
        self.coefficient = coefficient
        self.axis = axis


DIFFERENTIAL = Regex(r"d[xy](?![A-Za-z0-9_])")
INTEGER = Regex(r"\d+")
SIGN = one_of("+ -")
ADDOP = one_of("+ -")
LPAR, RPAR = map(Suppress, "()")


def _power(tokens):
    base = tokens[0].value
    if len(tokens) == 1:
        return _Value(base)
    return _Value(base ** int(tokens[1]))


def _product(tokens):
    result = tokens[0].value
    for factor in tokens[1:]:
        result = result * factor.value
    return _Value(result)


def _signed_sum(tokens) -> List[Tuple[int, Any]]:
    """[sign?] v (op v)* as a list of (sign, item)."""
    items = list(tokens)
    sign = 1
    if items and isinstance(items[0], str):
        sign = -1 if items.pop(0) == "-" else 1
    pairs = [(sign, items[0])]
    for op, item in zip(items[1::2], items[2::2]):
        pairs.append((-1 if op == "-" else 1, item))
    return pairs


def _sum(tokens):
    pairs = _signed_sum(tokens)
    result = None
    for sign, item in pairs:
        value = item.value if sign > 0 else -item.value
        result = value if result is None else result + value
    return _Value(result)


def _arithmetic(atom: ParserElement) -> Tuple[Forward, ParserElement]:
    """Sums of signed products of powers over atom, with implicit multiplication."""
    expr = Forward()
    base = atom | (LPAR + expr + RPAR)
    power = (base + Opt(Suppress("^") - INTEGER)).set_parse_action(_power)
    explicit = Suppress(Literal("*") + ~DIFFERENTIAL) - power
    term = (power + ZeroOrMore(explicit | power)).set_parse_action(_product)
    expr <<= (Opt(SIGN) + term + ZeroOrMore(ADDOP - term)).set_parse_action(_sum)
    return expr, term


def _rational_action(make: Callable[[Any], Any]):
    def action(s, loc, tokens):
        num, _, den = tokens[0].partition("/")
        if den and int(den) == 0:
            raise ParseFatalException(s, loc, "zero denominator")
        return _Value(make(QQ(int(num), int(den or 1))))

    return action


@lru_cache(maxsize=None)
def _poly_grammar():
    R = poly_ring(QQ)
    x, y = R.gens
    number = Regex(r"\d+(?:/\d+)?").set_parse_action(_rational_action(R.ground_new))
    variable = Regex(r"[xy]").set_parse_action(lambda t: _Value(x if t[0] == "x" else y))
    return _arithmetic((number | variable).set_name("number or variable"))


def _form_term(tokens):
    if len(tokens) == 1:
        return _Differential(None, tokens[0])
    return _Differential(tokens[0].value, tokens[1])


@lru_cache(maxsize=None)
def _form_grammar():
    expr, term = _poly_grammar()
    differential = DIFFERENTIAL.copy().set_name("dx or dy")
    piece = (Opt(term + Opt(Suppress("*"))) + differential).set_parse_action(_form_term)
    return Opt(SIGN) + piece + ZeroOrMore(ADDOP - piece)


@lru_cache(maxsize=None)
def _alpha_grammar():
    integer = INTEGER.copy().set_parse_action(lambda t: _Value(EisensteinInt(int(t[0]))))
    unit = Literal("j").set_parse_action(lambda t: _Value(EisensteinInt.j()))
    expr, _ = _arithmetic((integer | unit).set_name("integer or j"))
    return expr + Opt(Suppress("/") - expr)


def _parse(grammar: ParserElement, text: str, what: str):
    source = normalize_expression(text)
    try:
        return grammar.parse_string(source, parse_all=True)
    except ParseBaseException as exc:
        logger.info("parse_failed", what=what, line=exc.lineno, column=exc.col, reason=exc.msg)
        raise ParseError(f"cannot parse {what}: {exc.msg}", exc.lineno, exc.col, exc.line) from None


def parse_poly(text: str) -> PolyElement:
    """
    Parse a polynomial in x, y with integer or rational literals.

    Raises:
        ParseError: With the line and column of the first offending token
    """
    expr, _ = _poly_grammar()
    return _parse(expr, text, "polynomial")[0].value


def parse_form(text: str) -> OneForm:
    """
    Parse a 1-form "A dx + B dy"; terms may come in any order and repeat.

    Examples:
        "x dy - y dx", "(x - y) dx + x^2 dy", "2*y dx - 3*x*dy"

    Raises:
        ParseError: With the line and column of the first offending token
    """
    tokens = _parse(_form_grammar(), text, "form")
    R = poly_ring(QQ)
    a, b = R.zero, R.zero
    for sign, piece in _signed_sum(tokens):
        coefficient = R.one if piece.coefficient is None else piece.coefficient
        if sign < 0:
            coefficient = -coefficient
        if piece.axis == "dx":
            a += coefficient
        else:
            b += coefficient
    logger.debug("form_parsed", text=text)
    return OneForm(a, b)


def parse_alpha(text: str) -> Tuple[EisensteinInt, EisensteinInt]:
    """
    Parse a pencil parameter alpha_1 / beta_1 with alpha_1, beta_1 in Z[j].

    Examples:
        "2", "(1 + j)/2", "3 - 2j"
    """
    tokens = _parse(_alpha_grammar(), text, "parameter")
    numerator = tokens[0].value
    denominator = tokens[1].value if len(tokens) > 1 else EisensteinInt(1)
    return numerator, denominator
