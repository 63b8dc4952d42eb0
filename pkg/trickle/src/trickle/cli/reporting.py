"""Writing reports as indented JSON documents or CSV tables."""

import csv
import sys
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import TextIO

from pydantic import BaseModel

from trickle.logger import get_logger
from trickle.serializer import serialize

from .documents import OutputFormat

logger = get_logger(__name__)

type Row = BaseModel | Mapping[str, object]
type Tables = Mapping[str, Sequence[Row]]


def _cell(value: object) -> object:
    if value is None:
        return ""
    if isinstance(value, (list, tuple, dict)):
        return serialize(value)
    return value


def _as_dict(row: Row) -> dict[str, object]:
    return row.model_dump(mode="json") if isinstance(row, BaseModel) else dict(row)


def write_table(rows: Sequence[Row], stream: TextIO) -> None:
    """Write one table with a header taken from the first row."""
    records = [_as_dict(row) for row in rows]
    if not records:
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(records[0])
    for record in records:
        writer.writerow(_cell(value) for value in record.values())


def table_path(out: Path, name: str, count: int) -> Path:
    """`out` for a single table, `<stem>.<name>.csv` beside it otherwise."""
    return out if count == 1 else out.with_name(f"{out.stem}.{name}.csv")


def emit(
    report: BaseModel, tables: Tables, output_format: OutputFormat, out: Path | None
) -> None:
    """Write `report` as JSON, or its `tables` as CSV, to `out` or stdout."""
    if output_format is OutputFormat.STRUCTURED:
        text = serialize(report, indent=True) + "\n"
        if out is None:
            sys.stdout.write(text)
        else:
            out.write_text(text, encoding="utf-8")
        logger.info("Wrote report", extra={"out": str(out or "-"), "format": str(output_format)})
        return
    for name, rows in tables.items():
        if out is None:
            sys.stdout.write(f"# {name}\n")
            write_table(rows, sys.stdout)
            continue
        with table_path(out, name, len(tables)).open("w", encoding="utf-8", newline="") as f:
            write_table(rows, f)
    logger.info("Wrote tables", extra={"out": str(out or "-"), "tables": list(tables)})


def verdict(line: str) -> None:
    """Print a one-line human verdict on stderr, keeping stdout for the report."""
    sys.stderr.write(line + "\n")
