# folpol/core/logging_config.py
"""
Logging Configuration - structlog setup and recurring engine events
"""

import logging
import sys
from typing import Any, Optional

import structlog

from folpol.core.config import settings
from folpol.utils.time_utils import humanize_duration


def setup_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> None:
    """
    Configure structlog once for the process.

    Logs go to stderr so that JSON reports on stdout stay clean.

    Args:
        level: Log level name (defaults to settings.LOG_LEVEL)
        fmt: "console" or "json" (defaults to settings.LOG_FORMAT)
    """
    level_name = (level or settings.LOG_LEVEL).upper()
    numeric_level = logging.getLevelName(level_name)
    if not isinstance(numeric_level, int):
        numeric_level = logging.WARNING

    renderer: Any
    if (fmt or settings.LOG_FORMAT) == "json":
        renderer = structlog.processors.JSONRenderer()
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=False)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


class FolpolLogger:
    """Structured events shared by the engine modules"""

    _logger = structlog.get_logger("folpol")

    @staticmethod
    def log_blowup(node: int, component: int, dicritical: bool, multiplicity: int) -> None:
        FolpolLogger._logger.debug(
            "blowup_performed",
            node=node,
            component=component,
            dicritical=dicritical,
            multiplicity=multiplicity,
        )

    @staticmethod
    def log_truncation(previous: int, current: int, reason: str) -> None:
        FolpolLogger._logger.info(
            "truncation_deepened",
            previous=previous,
            current=current,
            reason=reason,
        )

    @staticmethod
    def log_field_extension(radicand: int) -> None:
        FolpolLogger._logger.info("field_extended", radicand=radicand)

    @staticmethod
    def log_singular_point(chart: str, coords: str, milnor: Any) -> None:
        FolpolLogger._logger.debug(
            "singular_point_found",
            chart=chart,
            coords=coords,
            milnor=milnor,
        )

    @staticmethod
    def log_invariant(name: str, value: Any, **context: Any) -> None:
        FolpolLogger._logger.debug("invariant_computed", name=name, value=value, **context)

    @staticmethod
    def log_command(command: str, success: bool, duration_ms: float, **context: Any) -> None:
        if success:
            FolpolLogger._logger.info(
                "command_completed",
                command=command,
                duration_ms=round(duration_ms, 2),
                elapsed=humanize_duration(duration_ms / 1000.0),
                **context,
            )
        else:
            FolpolLogger._logger.warning(
                "command_failed",
                command=command,
                duration_ms=round(duration_ms, 2),
                **context,
            )
