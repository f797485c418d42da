# bidisearch/bench/report.py
"""
Benchmark report writers. Rows keep a fixed column order; the averages
section holds per-column arithmetic means over the rows with status "ok".
"""

from __future__ import annotations

import csv
import io
import json
import logging

import numpy as np

from bidisearch import hooks
from bidisearch.utils import resolve_hook

log = logging.getLogger(__name__)

BASE_COLUMNS = [
    "instance",
    "name",
    "algorithm",
    "status",
    "solved",
    "cost",
    "nodes_generated",
    "nodes_expanded",
    "first_solution_nodes",
    "first_solution_cost",
    "optimal_found_at",
    "memory_peak",
    "probe_generated",
    "setup_generated",
    "iterations",
    "direction",
]
OPTIONAL_COLUMNS = ["baseline_nodes_generated", "nodes_ratio", "wall_time", "time_ratio"]
COLUMNS = BASE_COLUMNS + OPTIONAL_COLUMNS

# never averaged
LABEL_COLUMNS = {"instance", "name", "algorithm", "status", "direction"}

AVERAGES_MARKER = "averages"
EXCLUDED_KEY = "excluded"


def report_columns(rows) -> list[str]:
    present = set().union(*(row.keys() for row in rows)) if rows else set()
    return BASE_COLUMNS + [column for column in OPTIONAL_COLUMNS if column in present]


def summarize(rows) -> dict:
    """Means of the numeric columns over status-ok rows plus the exclusion count"""
    kept = [row for row in rows if row.get("status", "ok") == "ok"]
    averages = {}
    for column in report_columns(rows):
        if column in LABEL_COLUMNS:
            continue
        values = [row[column] for row in kept if isinstance(row.get(column), (int, float))]
        if values:
            averages[column] = float(np.mean(np.asarray(values, dtype=float)))
    return {"averages": averages, EXCLUDED_KEY: len(rows) - len(kept)}


def emit_report(rows, format: str = "csv") -> str:
    emit = resolve_hook(hooks.report_formats, format, kind="report format")
    summary = summarize(rows)
    if summary[EXCLUDED_KEY]:
        log.warning("%d of %d rows excluded from averages", summary[EXCLUDED_KEY], len(rows))
    return emit(rows, summary)


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return value


def emit_csv(rows, summary) -> str:
    buffer = io.StringIO()
    columns = report_columns(rows)
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])
    if rows:
        writer.writerow([])
        writer.writerow([AVERAGES_MARKER, "mean"])
        for column, value in summary["averages"].items():
            writer.writerow([column, repr(value)])
        writer.writerow([EXCLUDED_KEY, summary[EXCLUDED_KEY]])
    return buffer.getvalue()


def emit_json(rows, summary) -> str:
    columns = report_columns(rows)
    payload = {
        "columns": columns,
        "rows": [{column: row.get(column) for column in columns} for row in rows],
        "averages": summary["averages"],
        EXCLUDED_KEY: summary[EXCLUDED_KEY],
    }
    return json.dumps(payload, indent=2) + "\n"


def _parse_value(text: str):
    if text == "":
        return None
    for convert in (int, float):
        try:
            return convert(text)
        except ValueError:
            pass
    return text


def read_report(text: str) -> dict:
    """Parse a csv report back into {"rows", "averages", "excluded"}"""
    records = list(csv.reader(io.StringIO(text)))
    if not records:
        return {"rows": [], "averages": {}, EXCLUDED_KEY: 0}
    columns, body = records[0], records[1:]
    rows, averages, excluded = [], {}, 0
    in_averages = False
    for record in body:
        if not record:
            continue
        if record[0] == AVERAGES_MARKER and len(record) == 2:
            in_averages = True
        elif in_averages and record[0] == EXCLUDED_KEY:
            excluded = int(record[1])
        elif in_averages:
            averages[record[0]] = float(record[1])
        else:
            row = {column: _parse_value(value) for column, value in zip(columns, record)}
            for label in LABEL_COLUMNS:
                if label in row and row[label] is not None:
                    row[label] = record[columns.index(label)]
            row["instance"] = int(row["instance"])
            rows.append(row)
    return {"rows": rows, "averages": averages, EXCLUDED_KEY: excluded}


def emit_table(rows, format: str = "csv") -> str:
    """Plain tables (bounds reports, oracle costs) in the columns of the first row"""
    if format == "json":
        return json.dumps(list(rows), indent=2) + "\n"
    buffer = io.StringIO()
    if rows:
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows({key: _cell(value) for key, value in row.items()} for row in rows)
    return buffer.getvalue()
