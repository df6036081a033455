"""Tunable caps. These are configuration, not algorithm constants."""

from __future__ import annotations

import os

DEFAULT_TABLE_CAP = 10**7
TABLE_CAP_ENV = "LOCALCROSS_TABLE_CAP"

# oracle caps
ORACLE_Y_CAP = 9
ORACLE_TWO_SIDED_CAP = 10**9  # |X|! * |Y|! upper bound on the raw search space
ORACLE_OUTER_N_CAP = 9
ORACLE_BANDWIDTH_N_CAP = 10

# cosmetic drawing constants
SVG_RADIUS = 200.0
SVG_MARGIN = 40.0
SVG_ROW_GAP = 160.0
SVG_COLUMN_GAP = 60.0


def table_cap(explicit: int | None = None) -> int:
    """Resolve the memo-table cap: explicit argument, then env var, then default."""
    if explicit is not None:
        return int(explicit)
    raw = os.environ.get(TABLE_CAP_ENV)
    if raw:
        return int(raw)
    return DEFAULT_TABLE_CAP
