# folpol/domain/validators.py
"""
Input Validation - Turning requests into parsed input documents
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import structlog
from sympy.polys.rings import PolyElement

from folpol.algebra.poly import format_poly
from folpol.catalog import get_entry
from folpol.core.exceptions import InvalidInput
from folpol.domain.models import EngineOptions, RunRequest
from folpol.foliation.forms import OneForm
from folpol.linsneto.eisenstein import EisensteinInt
from folpol.utils.parser import parse_alpha, parse_form, parse_poly

logger = structlog.get_logger("validators")


@dataclass
class InputDocument:
    """A parsed 1-form with its curves and options."""

    form: Optional[OneForm]
    curves: List[PolyElement] = field(default_factory=list)
    options: EngineOptions = field(default_factory=EngineOptions)
    example: Optional[str] = None
    alpha: Optional[Tuple[EisensteinInt, EisensteinInt]] = None
    lines: List[int] = field(default_factory=list)

    def require_form(self) -> OneForm:
        if self.form is None:
            raise InvalidInput("a form or an example is required")
        return self.form

    def require_curves(self) -> List[PolyElement]:
        if not self.curves:
            raise InvalidInput("at least one --curve is required")
        return self.curves

    def to_dict(self) -> Dict[str, Any]:
        return {
            "form": self.form.format() if self.form is not None else None,
            "curves": [format_poly(c) for c in self.curves],
            "example": self.example,
            "options": self.options.model_dump(exclude_none=True),
        }


def build_document(request: RunRequest) -> InputDocument:
    """
    Parse a request: the explicit form and curves win over those of the example.

    Raises:
        ParseError: If a form, curve or parameter does not parse
        InvalidInput: If the example is unknown
    """
    form_text = request.form
    curve_texts = list(request.curves)
    example = None
    if request.example:
        entry = get_entry(request.example)
        example = entry["name"]
        form_text = form_text or entry["form"]
        curve_texts = curve_texts or list(entry.get("curves", []))

    form = parse_form(form_text) if form_text else None
    curves = [parse_poly(text) for text in curve_texts]
    for text, curve in zip(curve_texts, curves):
        if not curve or curve.is_ground:
            raise InvalidInput("a curve must be a non-constant polynomial", details={"curve": text})

    alpha = parse_alpha(request.alpha) if request.alpha else None
    lines = list(request.lines)
    if any(n < 1 for n in lines):
        raise InvalidInput("branch counts must be positive", details={"lines": lines})

    logger.debug("document_built", example=example, curves=len(curves))
    return InputDocument(
        form=form,
        curves=curves,
        options=request.options,
        example=example,
        alpha=alpha,
        lines=lines,
    )
