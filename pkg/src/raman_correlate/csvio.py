"""Deterministic CSV emission for sweep results."""

from __future__ import annotations

import csv
import io
import sys
from pathlib import Path

from .errors import RamanError
from .results import SweepResult

__all__ = ["format_csv", "write_csv", "read_csv"]

DIGITS = 12


def _fmt(x: float) -> str:
    s = f"{x:.{DIGITS}g}"
    return "0" if s == "-0" else s


def format_csv(result: SweepResult) -> str:
    buf = io.StringIO()
    for key, value in result.metadata.items():
        for part in str(value).splitlines() or [""]:
            buf.write(f"# {key}: {part}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(result.columns)
    for row in result.rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def write_csv(result: SweepResult, destination=None) -> None:
    """Write ``result`` to a path, an open text stream, or stdout when ``None``."""
    text = format_csv(result)
    if destination is None:
        sys.stdout.write(text)
        return
    if hasattr(destination, "write"):
        destination.write(text)
        return
    path = Path(destination)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise RamanError(f"cannot write {path}: {exc.strerror}") from exc


def read_csv(text: str) -> SweepResult:
    meta = {}
    body = []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(": ")
            meta[key] = value if key not in meta else meta[key] + "\n" + value
        else:
            body.append(line)
    rows = list(csv.reader(body))
    return SweepResult(tuple(rows[0]), [tuple(float(v) for v in r) for r in rows[1:]], meta)
