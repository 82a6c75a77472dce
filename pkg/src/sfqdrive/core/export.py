"""
Result export helpers.

CSV rows are written with 17 significant digits so reruns are byte-identical;
JSON is written with sorted keys.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, int)) and not isinstance(value, bool):
        if isinstance(value, int):
            return str(value)
        if math.isnan(value):
            return "nan"
        return format(value, ".17g")
    if hasattr(value, "item"):
        return format_value(value.item())
    return "" if value is None else str(value)


def write_csv(
    path: str | Path,
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    title: Optional[str] = None,
) -> Path:
    """Write a header row plus data rows, preceded by ``# title`` when given."""
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        if title:
            fh.write(f"# {title}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
    return out


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, float) and math.isnan(value):
        return None
    if hasattr(value, "tolist"):
        return _jsonable(value.tolist())
    return value


def write_json(path: str | Path, payload: Any) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n")
    return out
