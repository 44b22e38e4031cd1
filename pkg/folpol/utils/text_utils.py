# folpol/utils/text_utils.py
"""
Text Utilities - Pure functions for cleaning user input
"""

import re

import structlog

logger = structlog.get_logger("text_utils")

# Single-character substitutions keep the columns of parse errors aligned
_SUBSTITUTIONS = {
    "−": "-",  # minus sign
    "–": "-",
    "·": "*",  # middle dot
    "×": "*",
    "⋅": "*",
    "\t": " ",
}


def normalize_expression(text: str) -> str:
    """
    Normalize an expression to the ASCII input grammar.

    Args:
        text: Expression as typed or pasted

    Returns:
        Text of the same length with unicode operators replaced and "**" written as "^ "

    Raises:
        ValueError: If text is not a string
    """
    if not isinstance(text, str):
        logger.warning("invalid_expression_input", input=repr(text))
        raise ValueError(f"Expression must be a string, got {type(text).__name__}")

    cleaned = "".join(_SUBSTITUTIONS.get(ch, ch) for ch in text)
    cleaned = cleaned.replace("**", "^ ")
    if cleaned != text:
        logger.debug("expression_normalized", original=text, normalized=cleaned)
    return cleaned


def normalize_name(name: str) -> str:
    """
    Normalize a catalogue name: lowercase, words joined by dashes.

    Args:
        name: Name in any format (Saddle_Node K2, saddle node k2, ...)

    Returns:
        Normalized name such as "saddle-node-k2"
    """
    if not name or not isinstance(name, str):
        raise ValueError(f"Invalid name: {name!r}")
    cleaned = re.sub(r"[=\s_]+", "-", name.strip().lower())
    cleaned = re.sub(r"-+", "-", cleaned).strip("-")
    return cleaned
