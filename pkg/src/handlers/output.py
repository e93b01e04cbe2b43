"""CSV and JSON table writers with fixed 12-significant-digit formatting."""
import csv
import json
import math
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, Sequence, TextIO


def format_value(value: Any) -> str:
    """CSV cell text: 12 significant digits, true/false for booleans."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    if value is None:
        return ""
    return str(getattr(value, "value", value))


def _json_value(value: Any) -> Any:
    if isinstance(value, float) and math.isfinite(value):
        return float(f"{value:.12g}")
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return getattr(value, "value", value)


@contextmanager
def open_output(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
        return
    with Path(path).open("w", encoding="utf-8", newline="") as stream:
        yield stream


def write_table(rows: Sequence[dict], columns: Sequence[str], fmt: str, path: str | None = None) -> None:
    """Emit rows in argument order; CSV gets an exact header line, JSON an array of records."""
    with open_output(path) as stream:
        if fmt == "json":
            records = [{key: _json_value(row.get(key)) for key in columns} for row in rows]
            stream.write(json.dumps(records, indent=2) + "\n")
            return
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(row.get(key)) for key in columns])
