"""Deterministic report rendering for the command-line front end."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

SCHEMA = 1
SIG_DIGITS = 12


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = f"{x:.{SIG_DIGITS}g}"
    return "0" if s == "-0" else s


def normalize(obj: Any) -> Any:
    """Round floats to 12 significant digits, stringify non-finite floats and Fractions."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return fmt_float(obj)
        v = float(fmt_float(obj))
        return 0.0 if v == 0 else v
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else int(obj)
    if isinstance(obj, dict):
        return {str(k): normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    return str(obj)


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt_float(v)
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    return "" if v is None else str(v)


@dataclass
class Report:
    command: str
    inputs: dict
    results: dict
    columns: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    passed: bool | None = None
    wall_time: float = 0.0

    def as_dict(self) -> dict:
        out = {
            "schema": SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "notes": self.notes,
            "wall_time_s": round(self.wall_time, 3),
        }
        if self.passed is not None:
            out["passed"] = self.passed
        return normalize(out)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.rows:
            w.writerow([_cell(v) for v in row])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"# {self.command}"]
        for k in sorted(self.inputs):
            if self.inputs[k] is None:
                continue
            lines.append(f"{k}: {_cell(self.inputs[k])}")
        if self.rows:
            widths = [max(len(c), *(len(_cell(r[i])) for r in self.rows)) for i, c in enumerate(self.columns)]
            lines.append("  ".join(c.ljust(w) for c, w in zip(self.columns, widths)).rstrip())
            for r in self.rows:
                lines.append("  ".join(_cell(v).ljust(w) for v, w in zip(r, widths)).rstrip())
        for note in self.notes:
            lines.append(f"note: {note}")
        if self.passed is not None:
            lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        lines.append(f"wall time: {self.wall_time:.3f} s")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()
