"""Deterministic reports for the command-line tool.

JSON is the machine contract: keys keep their insertion order, rationals are
"n/d" strings, and nothing time- or host-dependent is recorded, so identical
inputs give byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__

SCHEMA = "ringprob.report/1"


def jsonable(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [jsonable(v) for v in sorted(value)]
    if hasattr(value, "item"):  # numpy scalars
        return value.item()
    return value


@dataclass
class Report:
    command: str
    inputs: list[dict] = field(default_factory=list)  # {"label", "sha256"}
    results: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    exit_status: int = 0
    tool: dict = field(default_factory=lambda: {"name": "ringprob", "version": __version__})
    schema: str = SCHEMA

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "tool": dict(self.tool),
            "command": self.command,
            "inputs": jsonable(self.inputs),
            "results": jsonable(self.results),
            "summary": jsonable(self.summary),
            "exit_status": self.exit_status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(command=data["command"], inputs=data["inputs"], results=data["results"],
                   summary=data["summary"], exit_status=data["exit_status"],
                   tool=data["tool"], schema=data["schema"])

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"ringprob {self.tool.get('version', '?')}: {self.command}"]
        for item in self.inputs:
            lines.append(f"input {item['label']} sha256={item['sha256'][:16]}")
        for result in jsonable(self.results):
            lines.append("")
            lines.extend(_text_block(result))
        lines.append("")
        lines.append("summary: " + ", ".join(f"{k}={_scalar(v)}"
                                              for k, v in jsonable(self.summary).items()))
        lines.append(f"exit status: {self.exit_status}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        """One row per result, nested values flattened to JSON cells."""
        rows = jsonable(self.results)
        columns: list[str] = []
        for row in rows:
            for key in row:
                if key not in columns:
                    columns.append(key)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_scalar(row.get(c, "")) for c in columns])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


def _scalar(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def _text_block(result: dict, indent: str = "") -> list[str]:
    lines = []
    for key, value in result.items():
        if isinstance(value, dict) and value:
            lines.append(f"{indent}{key}:")
            lines.extend(_text_block(value, indent + "  "))
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{indent}{key}: ({len(value)})")
            for v in value:
                lines.append(f"{indent}  - " + ", ".join(f"{k}={_scalar(x)}" for k, x in v.items()))
        else:
            lines.append(f"{indent}{key}: {_scalar(value)}")
    return lines
