"""Timezone-aware UTC timestamp utilities."""

from datetime import datetime, timezone


def utc_now() -> datetime:
    """Get current time as timezone-aware UTC datetime."""
    return datetime.now(timezone.utc)


def utc_stamp() -> str:
    """Current UTC time as an ISO-8601 string with second precision."""
    return utc_now().replace(microsecond=0).isoformat()
