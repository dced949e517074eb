"""Column tables and their CSV/JSON serialization.

CSV dialect: comma separated, header row, LF line endings, floats written
with 17 significant digits (always with a '.' or exponent so they parse back
as floats), empty field for a missing value, ``true``/``false`` for flags.
"""
from dataclasses import dataclass, field
import csv
import io
import json
import math

import numpy as np

from ..errors import ValidationError


@dataclass
class Table:
    columns: tuple
    rows: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.columns = tuple(self.columns)
        self.rows = [tuple(_plain(v) for v in row) for row in self.rows]
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValidationError(f"row width {len(row)} != {len(self.columns)} columns")

    def column(self, name):
        i = self.columns.index(name)
        return [row[i] for row in self.rows]

    def records(self):
        return [dict(zip(self.columns, row)) for row in self.rows]

    def __eq__(self, other):
        return (isinstance(other, Table) and self.columns == other.columns
                and self.rows == other.rows)


def _plain(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(v)
    return v


def _format(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        text = format(v, ".17g")
        if math.isfinite(v) and not any(ch in text for ch in ".e"):
            text += ".0"
        return text
    return str(v)


def _parse(text):
    if text == "":
        return None
    if text == "true":
        return True
    if text == "false":
        return False
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def to_csv(table, path=None):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_format(v) for v in row])
    text = buf.getvalue()
    if path is not None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text


def from_csv(source):
    """Parse CSV text (or a path to a ``.csv`` file) produced by :func:`to_csv`."""
    text = source
    if "\n" not in source and source.endswith(".csv"):
        with open(source, encoding="utf-8", newline="") as fh:
            text = fh.read()
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    return Table(header, [tuple(_parse(x) for x in row) for row in reader])


def to_json(table, path=None):
    doc = {"columns": list(table.columns), "rows": [list(r) for r in table.rows], "meta": table.meta}
    text = json.dumps(doc, indent=1, sort_keys=True, allow_nan=False) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text


def from_json(source):
    text = source
    if not source.lstrip().startswith("{"):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    doc = json.loads(text)
    return Table(doc["columns"], [tuple(r) for r in doc["rows"]], doc.get("meta", {}))


def write(table, path=None, fmt="csv"):
    """Serialize ``table``; returns the text and writes it when ``path`` is given."""
    if fmt == "csv":
        return to_csv(table, path)
    if fmt == "json":
        return to_json(table, path)
    raise ValidationError(f"unknown format {fmt!r}", field="format")


def parse_grid(spec):
    """``'min:max:step'`` (inclusive), ``'a,b,c'`` or a single number -> sorted floats."""
    spec = spec.strip()
    try:
        if ":" in spec:
            lo, hi, step = (float(x) for x in spec.split(":"))
            if not step > 0 or hi < lo:
                raise ValidationError(f"empty grid {spec!r}", field="grid")
            n = int(math.floor((hi - lo) / step + 1e-9)) + 1
            return [float(v) for v in np.round(lo + step * np.arange(n), 12)]
        values = [float(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise ValidationError(f"cannot parse grid {spec!r}", field="grid") from None
    if not values:
        raise ValidationError(f"empty grid {spec!r}", field="grid")
    return values
