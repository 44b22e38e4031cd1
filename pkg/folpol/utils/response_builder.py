# folpol/utils/response_builder.py
"""
Response Builder - Consistent report formatting for the CLI and the HTTP surface
"""

from typing import Any, Dict, Optional

import structlog
from fastapi.responses import JSONResponse

from folpol.core.exceptions import FolpolException
from folpol.utils.serialization import to_jsonable
from folpol.utils.time_utils import format_timestamp

logger = structlog.get_logger("response_builder")

SCHEMA = "folpol/1"


class ResponseBuilder:
    """Build consistent reports"""

    @staticmethod
    def ok(
        command: str,
        data: Any = None,
        meta: Optional[Dict[str, Any]] = None,
    ) -> Dict[str, Any]:
        """
        Build success report.

        Args:
            command: Command that produced the data
            data: Report data
            meta: Additional metadata (options, field, duration)

        Returns:
            Formatted report dictionary
        """
        response = {
            "schema": SCHEMA,
            "status": "ok",
            "command": command,
            "timestamp": format_timestamp(),
            "data": to_jsonable(data),
        }

        if meta:
            response["meta"] = to_jsonable(meta)

        logger.debug("response_ok", command=command, data_type=type(data).__name__)
        return response

    @staticmethod
    def error(
        error_code: str,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        command: Optional[str] = None,
    ) -> Dict[str, Any]:
        """
        Build error report.

        Args:
            error_code: Machine-readable error code
            message: Human-readable error message
            details: Additional error details
            command: Command that failed

        Returns:
            Error report dictionary
        """
        error_response: Dict[str, Any] = {
            "schema": SCHEMA,
            "status": "error",
            "error": {
                "code": error_code,
                "message": message,
                "timestamp": format_timestamp(),
            },
        }

        if details:
            error_response["error"]["details"] = to_jsonable(details)

        if command:
            error_response["command"] = command

        logger.warning(
            "report_error",
            error_code=error_code,
            message=message,
            details=details,
        )
        return error_response

    @staticmethod
    def from_exception(exc: FolpolException, command: Optional[str] = None) -> Dict[str, Any]:
        return ResponseBuilder.error(exc.code, exc.message, exc.details, command)

    @staticmethod
    def json_error(exc: FolpolException, command: Optional[str] = None) -> JSONResponse:
        """
        Error report as an HTTP response.

        Returns:
            JSONResponse with the status code of the exception
        """
        return JSONResponse(
            content=ResponseBuilder.from_exception(exc, command),
            status_code=exc.http_status,
        )
