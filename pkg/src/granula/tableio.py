"""Information tables in CSV or JSON, read into and written out of information systems.

CSV dialect: comma separated, UTF-8, a mandatory header row whose first cell
labels the object column, one row per object, ``?`` for a missing value.  JSON
documents carry the same content as ``{"header": [...], "rows": [[object,
value, ...], ...], "missing": "?"}`` where ``header`` lists attribute names only.

Each column becomes one attribute granule: objects with equal non-missing
values share a block, objects with a missing value are left out of the carrier.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

from .core import Universe, make_granule
from .errors import DuplicateObjectError, EmptyTableError, ParseError
from .rough import InformationSystem

__all__ = ["MISSING", "TableDocument", "read_table", "parse_csv", "parse_json", "to_system", "ingest", "export", "dump_csv"]

MISSING = "?"


@dataclass(frozen=True)
class TableDocument:
    header: tuple[str, ...]
    rows: tuple[tuple[str, tuple[str, ...]], ...]
    missing: str = MISSING
    object_label: str = "object"


def _check_shape(header, rows) -> None:
    if not header:
        raise EmptyTableError("the table has no attribute columns")
    if not rows:
        raise EmptyTableError("the table has no rows")


def parse_csv(text: str) -> TableDocument:
    if text.startswith("﻿"):
        text = text[1:]
    records = list(csv.reader(io.StringIO(text)))
    numbered = [(i + 1, r) for i, r in enumerate(records) if any(cell.strip() for cell in r)]
    if not numbered:
        raise EmptyTableError("the document is empty")
    _, head = numbered[0]
    head = [cell.strip() for cell in head]
    width = len(head)
    rows = []
    for line, record in numbered[1:]:
        if len(record) != width:
            column = min(len(record), width) + 1
            raise ParseError(f"row has {len(record)} fields, header has {width}", line=line, column=column)
        cells = [cell.strip() for cell in record]
        rows.append((line, cells[0], tuple(cells[1:])))
    return _document(head[0] or "object", tuple(head[1:]), rows, MISSING)


def parse_json(text: str) -> TableDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(data, dict) or "header" not in data or "rows" not in data:
        raise ParseError("expected an object with 'header' and 'rows'")
    missing = str(data.get("missing", MISSING))
    header = data["header"]
    if not isinstance(header, list):
        raise ParseError("'header' must be a list")
    rows = []
    for i, record in enumerate(data["rows"]):
        if not isinstance(record, list) or len(record) != len(header) + 1:
            raise ParseError(f"row {i + 1} must hold an object name and {len(header)} values", line=i + 1)
        cells = [missing if v is None else str(v).strip() for v in record]
        rows.append((i + 1, cells[0], tuple(cells[1:])))
    return _document(str(data.get("object", "object")), tuple(str(h) for h in header), rows, missing)


def _document(label, header, rows, missing) -> TableDocument:
    _check_shape(header, rows)
    if len(set(header)) != len(header):
        raise ParseError("attribute names must be unique", line=1)
    seen: dict[str, int] = {}
    for line, name, _ in rows:
        if not name or name == missing:
            raise ParseError("missing object name", line=line, column=1)
        if name in seen:
            raise DuplicateObjectError(f"object {name!r} on line {line} already appeared on line {seen[name]}")
        seen[name] = line
    return TableDocument(header, tuple((name, values) for _, name, values in rows), missing, label)


def read_table(path: str | Path, format: str | None = None) -> TableDocument:
    """Read a CSV or JSON table; the format defaults to the file extension."""
    path = Path(path)
    fmt = (format or path.suffix.lstrip(".") or "csv").lower()
    text = path.read_text(encoding="utf-8")
    if fmt == "csv":
        return parse_csv(text)
    if fmt == "json":
        return parse_json(text)
    raise ValueError(f"unsupported table format {fmt!r}")


def to_system(doc: TableDocument) -> InformationSystem:
    names = [name for name, _ in doc.rows]
    try:
        u = Universe(tuple(names))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    attributes = []
    for col, attr in enumerate(doc.header):
        classes: dict[str, list[int]] = {}
        for i, (_, values) in enumerate(doc.rows):
            if values[col] != doc.missing:
                classes.setdefault(values[col], []).append(i)
        attributes.append((attr, make_granule(classes.values(), u)))
    return InformationSystem(u, tuple(attributes))


def ingest(path: str | Path, format: str | None = None) -> InformationSystem:
    return to_system(read_table(path, format))


def dump_csv(sys: InformationSystem, object_label: str = "object") -> str:
    """CSV text whose re-ingestion gives back ``sys``; values are generated block labels."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([object_label, *sys.names])
    labels = []
    for g in sys.granules:
        owner = g.block_of
        labels.append({i: f"v{owner[i] + 1}" for i in g.carrier})
    for i, name in enumerate(sys.universe.elements):
        writer.writerow([name, *(col.get(i, MISSING) for col in labels)])
    return out.getvalue()


def export(sys: InformationSystem, path: str | Path) -> None:
    Path(path).write_text(dump_csv(sys), encoding="utf-8")
