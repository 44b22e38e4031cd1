# folpol/utils/serialization.py
"""
Serialization - JSON-safe values and the indented text rendering of reports
"""

import json
import math
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any, List

INFINITE = "infinite"


def to_jsonable(value: Any) -> Any:
    """
    Convert report values to plain JSON types.

    math.inf becomes "infinite", fractions become "p/q" strings (integers
    when exact), objects with to_dict are expanded.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if math.isinf(value):
            return INFINITE if value > 0 else f"-{INFINITE}"
        return int(value) if value.is_integer() else value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=repr) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v) for v in items]
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if is_dataclass(value):
        return to_jsonable(asdict(value))
    return str(value)


def dumps(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), indent=2, ensure_ascii=False)


def render_text(payload: Any, indent: int = 0) -> str:
    """Indented "key: value" rendering of a JSON-safe payload."""
    lines: List[str] = []
    _render(to_jsonable(payload), indent, lines)
    return "\n".join(lines)


def _render(value: Any, indent: int, lines: List[str]) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                _render(item, indent + 1, lines)
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}-")
                _render(item, indent + 1, lines)
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")


def _scalar(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list)):
        return "{}" if isinstance(value, dict) else "[]"
    return str(value)
