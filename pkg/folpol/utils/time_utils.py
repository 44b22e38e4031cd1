# folpol/utils/time_utils.py
"""
Time Utilities - Timestamps and durations for report metadata
"""

import time
from datetime import datetime, timezone
from typing import Optional

import structlog

logger = structlog.get_logger("time_utils")


def utc_now() -> datetime:
    """
    Get current UTC time with timezone awareness.

    Returns:
        Current UTC datetime
    """
    return datetime.now(timezone.utc)


def format_timestamp(dt: Optional[datetime] = None) -> str:
    """ISO timestamp with a trailing Z (defaults to now)."""
    if dt is None:
        dt = utc_now()
    return dt.astimezone(timezone.utc).isoformat().replace("+00:00", "Z")


def humanize_duration(seconds: float) -> str:
    """
    Convert duration in seconds to human-readable string.

    Args:
        seconds: Duration in seconds

    Returns:
        Human-readable duration
    """
    if seconds < 1:
        return f"{seconds * 1000:.0f} ms"
    if seconds < 60:
        return f"{seconds:.1f} seconds"
    if seconds < 3600:
        return f"{seconds / 60:.1f} minutes"
    return f"{seconds / 3600:.1f} hours"


class Stopwatch:
    """Monotonic timer for command durations."""

    def __init__(self):
        self.started = time.perf_counter()

    @property
    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.started) * 1000.0
