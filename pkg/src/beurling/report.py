"""Experiment reports: a single JSON document per run plus human/CSV renderings."""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import __version__

SCHEMA_VERSION = 1
VERDICTS = ("pass", "fail", "inconclusive")


@dataclass
class ExperimentReport:
    command: str
    parameters: dict[str, Any]
    result: dict[str, Any]
    verdict: str
    witnesses: dict[str, Any] = field(default_factory=dict)
    wall_clock_seconds: float | None = None
    artifact_version: str = __version__

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}")

    def to_document(self) -> dict[str, Any]:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "artifact_version": self.artifact_version,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "result": self.result,
        }
        # wall-clock time breaks byte-for-byte reruns, so it is opt-in
        if self.wall_clock_seconds is not None:
            doc["wall_clock_seconds"] = self.wall_clock_seconds
        return doc

    def to_json(self) -> str:
        return dumps(self.to_document()) + "\n"

    def write(self, path: str | os.PathLike) -> None:
        atomic_write_text(Path(path), self.to_json())


def _float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    text = f"{x:.17g}"
    # keep floats recognizable as floats
    if all(c in "-0123456789" for c in text):
        text += ".0"
    return text


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _float(obj)
    if hasattr(obj, "item") and callable(obj.item):  # numpy scalars
        return dumps(obj.item(), indent, _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, bool, str)) or v is None for v in obj):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def atomic_write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt(v: Any) -> str:
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, (list, tuple)) and all(isinstance(x, (int, float)) for x in v):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    return str(v)


def _table_rows(result: dict[str, Any]) -> list[dict[str, Any]] | None:
    rows = result.get("rows")
    if isinstance(rows, list) and rows and all(isinstance(r, dict) for r in rows):
        return rows
    return None


def render_table(report: ExperimentReport) -> str:
    out = io.StringIO()
    out.write(f"{report.command}  verdict={report.verdict}\n")
    params = "  ".join(f"{k}={_fmt(v)}" for k, v in report.parameters.items())
    out.write(f"parameters: {params}\n")
    rows = _table_rows(report.result)
    for k, v in report.result.items():
        if k == "rows" and rows is not None:
            continue
        if isinstance(v, (list, dict)) and len(str(v)) > 100:
            out.write(f"  {k}: <{len(v)} entries>\n")
        else:
            out.write(f"  {k}: {_fmt(v)}\n")
    if rows is not None:
        cols = [c for c in rows[0] if not isinstance(rows[0][c], (dict, list)) or c in ("P", "minimizer", "witness")]
        cells = [[_fmt(r.get(c)) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        out.write("  " + "  ".join(c.rjust(w) for c, w in zip(cols, widths)) + "\n")
        for row in cells:
            out.write("  " + "  ".join(x.rjust(w) for x, w in zip(row, widths)) + "\n")
    for k, v in report.witnesses.items():
        out.write(f"witness {k}: {_fmt(v)}\n")
    if report.wall_clock_seconds is not None:
        out.write(f"wall clock: {report.wall_clock_seconds:.3f} s\n")
    return out.getvalue()


def render_csv(report: ExperimentReport) -> str:
    """Per-row CSV when the payload is a series, otherwise key,value pairs."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    rows = _table_rows(report.result)

    def cell(v):
        if isinstance(v, float):
            return f"{v:.17g}"
        if isinstance(v, (list, dict)):
            return json.dumps(v)
        return v

    if rows is not None:
        cols = list(rows[0])
        writer.writerow(cols)
        for r in rows:
            writer.writerow([cell(r.get(c)) for c in cols])
    else:
        writer.writerow(["key", "value"])
        for k, v in report.result.items():
            writer.writerow([k, cell(v)])
    return buf.getvalue()
