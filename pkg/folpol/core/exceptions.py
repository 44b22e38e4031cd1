# folpol/core/exceptions.py
"""
Exceptions - Error hierarchy of the engine
"""

from typing import Any, Dict, Optional


class FolpolException(Exception):
    """Root of every engine error"""

    code = "FOLPOL_ERROR"
    exit_code = 1
    http_status = 422

    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        code: Optional[str] = None,
    ):
        super().__init__(message)
        self.message = message
        self.details = details or {}
        if code:
            self.code = code

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "details": self.details}


# ============================================================================
# Mathematical errors (exit code 1)
# ============================================================================

class NotSquareFree(FolpolException):
    code = "NOT_SQUARE_FREE"

    def __init__(self, poly: str):
        super().__init__(
            f"Curve has a repeated factor through the origin: {poly}",
            details={"poly": poly},
        )


class NeedsAlgebraicExtension(FolpolException):
    """
    Raised when a root lies outside the working field.

    ``radicand`` is set when a single quadratic extension of the rationals
    would be enough; the field driver then restarts over Q(sqrt(radicand)).
    """

    code = "NEEDS_ALGEBRAIC_EXTENSION"

    def __init__(
        self,
        reason: str,
        radicand: Optional[int] = None,
        field: Optional[str] = None,
        cluster: Optional[str] = None,
    ):
        details: Dict[str, Any] = {"reason": reason}
        if radicand is not None:
            details["radicand"] = radicand
        if field is not None:
            details["field"] = field
        if cluster is not None:
            details["cluster"] = cluster
        super().__init__(f"Algebraic extension required: {reason}", details=details)
        self.radicand = radicand


class TruncationInsufficient(FolpolException):
    code = "TRUNCATION_INSUFFICIENT"

    def __init__(self, bound: int, context: str = ""):
        super().__init__(
            f"Order reached the truncation bound {bound}" + (f" ({context})" if context else ""),
            details={"bound": bound, "context": context},
        )
        self.bound = bound


class NotInvariant(FolpolException):
    code = "NOT_INVARIANT"

    def __init__(self, what: str):
        super().__init__(f"Curve is not invariant: {what}", details={"curve": what})


class CeilingExceeded(FolpolException):
    code = "CEILING_EXCEEDED"

    def __init__(self, limit: int, what: str = "blow-ups"):
        super().__init__(
            f"Exceeded the configured maximum of {limit} {what}",
            details={"limit": limit, "what": what},
        )


class NotASeparatrix(FolpolException):
    code = "NOT_A_SEPARATRIX"

    def __init__(self, what: str):
        super().__init__(f"Branch is not a separatrix: {what}", details={"branch": what})


class NonGenericSamples(FolpolException):
    code = "NON_GENERIC_SAMPLES"

    def __init__(self, samples: Dict[str, Any]):
        super().__init__(
            "Could not certify a generic value from the sampled directions",
            details={"samples": samples},
        )


class LineNotGeneric(FolpolException):
    code = "LINE_NOT_GENERIC"

    def __init__(self, retries: int):
        super().__init__(
            f"No generic line found after {retries} attempts",
            details={"retries": retries},
        )


class ExcludedParameter(FolpolException):
    code = "EXCLUDED_PARAMETER"

    def __init__(self, value: str):
        super().__init__(
            f"Parameter {value} is excluded from the pencil",
            details={"value": value},
        )


class InvariantViolation(FolpolException):
    """Two independent routes to the same number disagreed"""

    code = "INVARIANT_VIOLATION"

    def __init__(self, name: str, left: Any, right: Any):
        super().__init__(
            f"Cross-check '{name}' failed: {left} != {right}",
            details={"check": name, "left": str(left), "right": str(right)},
        )


# ============================================================================
# Usage errors (exit code 2)
# ============================================================================

class ParseError(FolpolException, SyntaxError):
    code = "PARSE_ERROR"
    exit_code = 2
    http_status = 400

    def __init__(self, message: str, line: int, column: int, text: str = ""):
        super().__init__(
            f"{message} at line {line}, column {column}",
            details={"line": line, "column": column, "text": text},
        )
        self.msg = message
        self.lineno = line
        self.offset = column
        self.text = text


class UnknownCommand(FolpolException):
    code = "UNKNOWN_COMMAND"
    exit_code = 2
    http_status = 400

    def __init__(self, command: str):
        super().__init__(f"Unknown command: {command}", details={"command": command})


class InvalidInput(FolpolException):
    code = "INVALID_INPUT"
    exit_code = 2
    http_status = 400
