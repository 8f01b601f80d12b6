"""Tabular sweep output shared by the scenario runners."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NumericalError

__all__ = ["SweepResult"]


@dataclass
class SweepResult:
    columns: tuple[str, ...]
    rows: list[tuple[float, ...]] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        self.columns = tuple(self.columns)
        for r in self.rows:
            self._check(r)

    def _check(self, row):
        if len(row) != len(self.columns):
            raise NumericalError(f"row of length {len(row)} does not match header {self.columns}")
        if not all(np.isfinite(row)):
            raise NumericalError(f"non-finite value in row {row}")

    def append(self, *values: float) -> None:
        row = tuple(float(v) for v in values)
        self._check(row)
        self.rows.append(row)

    def column(self, name: str) -> np.ndarray:
        k = self.columns.index(name)
        return np.array([r[k] for r in self.rows], dtype=float)

    def __len__(self):
        return len(self.rows)
