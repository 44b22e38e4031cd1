# tests/test_utils.py
import json
import math
from datetime import datetime, timezone
from fractions import Fraction

import pytest

from folpol.core.exceptions import InvariantViolation
from folpol.utils.response_builder import SCHEMA, ResponseBuilder
from folpol.utils.serialization import INFINITE, dumps, render_text, to_jsonable
from folpol.utils.text_utils import normalize_expression, normalize_name
from folpol.utils.time_utils import Stopwatch, format_timestamp, humanize_duration


def test_normalize_expression_keeps_length():
    text = "x·y − 2x**3"
    cleaned = normalize_expression(text)
    assert cleaned == "x*y - 2x^ 3"
    assert len(cleaned) == len(text)
    with pytest.raises(ValueError):
        normalize_expression(None)


def test_normalize_name():
    assert normalize_name("  Node 2_3 ") == "node-2-3"
    with pytest.raises(ValueError):
        normalize_name("")


def test_jsonable_values():
    assert to_jsonable(math.inf) == INFINITE
    assert to_jsonable(Fraction(3, 2)) == "3/2"
    assert to_jsonable(Fraction(4, 2)) == 2
    assert to_jsonable({1: (1, 2.0)}) == {"1": [1, 2]}
    assert json.loads(dumps({"mu": math.inf}))["mu"] == "infinite"


def test_render_text():
    text = render_text({"a": 1, "b": {"c": True}, "d": [], "e": [1, {"f": None}]})
    assert text.splitlines() == ["a: 1", "b:", "  c: true", "d: []", "e:", "  - 1", "  -", "    f: null"]


def test_timestamps():
    stamp = format_timestamp(datetime(2024, 1, 2, 3, 4, 5, tzinfo=timezone.utc))
    assert stamp == "2024-01-02T03:04:05Z"
    assert humanize_duration(0.25) == "250 ms"
    assert humanize_duration(90) == "1.5 minutes"
    assert Stopwatch().elapsed_ms >= 0


def test_response_builder():
    ok = ResponseBuilder.ok("gsv", {"gsv": Fraction(1)}, meta={"field": "QQ"})
    assert ok["schema"] == SCHEMA
    assert ok["data"] == {"gsv": 1}
    error = ResponseBuilder.from_exception(InvariantViolation("gsv", 1, 2), command="gsv")
    assert error["status"] == "error"
    assert error["command"] == "gsv"
    assert error["error"]["code"] == "INVARIANT_VIOLATION"
    assert ResponseBuilder.json_error(InvariantViolation("gsv", 1, 2)).status_code == 422
