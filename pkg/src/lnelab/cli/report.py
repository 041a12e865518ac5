"""Bit-stable JSON reports and CSV sample dumps."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO

import numpy as np

from lnelab import __version__

SCHEMA = "lne-lab/1"
_SAFE_INT = 2 ** 53


def jsonable(value):
    """Convert report payloads to JSON-safe values.

    Rationals become ints or "n/d" strings; integers beyond double precision
    become decimal strings; complex numbers become [re, im].
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return jsonable(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (int, np.integer)):
        v = int(value)
        return v if abs(v) < _SAFE_INT else str(v)
    if isinstance(value, (float, np.floating)):
        v = float(value)
        return v if math.isfinite(v) else str(v)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass
class Report:
    command: str
    input: dict
    payload: dict
    warnings: list[str] = field(default_factory=list)
    settings: dict = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {
            "schema": SCHEMA,
            "tool_version": __version__,
            "command": self.command,
            "input": self.input,
            "result": self.payload,
            "warnings": self.warnings,
            "settings": self.settings,
        }
        return json.dumps(jsonable(doc), sort_keys=True, indent=2)


def error_json(command: str, kind: str, message: str) -> str:
    doc = {"schema": SCHEMA, "tool_version": __version__, "command": command,
           "error": {"type": kind, "message": message}}
    return json.dumps(doc, sort_keys=True, indent=2)


CSV_HEADER = ("re_x", "im_x", "re_y", "im_y", "residual")


def write_cloud_csv(cloud, residuals, stream: IO[str]) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for (x, y), r in zip(cloud.points, residuals):
        w.writerow([repr(float(x.real)), repr(float(x.imag)), repr(float(y.real)),
                    repr(float(y.imag)), repr(float(r))])
