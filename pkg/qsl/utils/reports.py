"""CSV and JSON report emission."""

import json
import logging
import sys
from collections.abc import Mapping, Sequence
from typing import Any, Optional

import pandas as pd

from qsl import constants

logger = logging.getLogger(__name__)


def to_csv(rows: Sequence[Mapping[str, Any]], columns: Sequence[str]) -> str:
    """Render rows as CSV text with a fixed column order and float format."""
    frame = pd.DataFrame(list(rows), columns=list(columns))
    return frame.to_csv(
        index=False, float_format=constants.CSV_FLOAT_FORMAT, lineterminator="\n"
    )


def to_json(record: Any) -> str:
    """Render a JSON-compatible record with sorted keys."""
    return json.dumps(record, indent=2, sort_keys=True, allow_nan=False) + "\n"


def emit(text: str, path: Optional[str] = None) -> None:
    """Write report text to a file, or to stdout when no path is given."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="") as fout:
        fout.write(text)
    logger.info("report written to %s", path)
