"""CSV datasets and JSON result documents."""
from __future__ import annotations

import csv
import json
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import DatasetFormatError
from .standardize import Dataset

FLOAT_FORMAT = "%.17g"


def read_dataset(path) -> Dataset:
    """Read a CSV with header ``x1,...,xm,y`` (one sample per row)."""
    with open(path, newline="", encoding="utf-8-sig") as fh:
        rows = list(csv.reader(fh))
    while rows and not any(cell.strip() for cell in rows[-1]):
        rows.pop()
    if not rows:
        raise DatasetFormatError(f"{path}: empty file")
    header = [h.strip() for h in rows[0]]
    if "y" not in header:
        raise DatasetFormatError(f"{path}: header has no 'y' column")
    y_col = header.index("y")
    x_cols = [j for j in range(len(header)) if j != y_col]
    if not x_cols:
        raise DatasetFormatError(f"{path}: header has no input columns")

    values = np.empty((len(rows) - 1, len(header)))
    for i, row in enumerate(rows[1:], start=1):
        if len(row) != len(header):
            raise DatasetFormatError(f"{path}: row {i} has {len(row)} cells, header has {len(header)}")
        for j, cell in enumerate(row):
            try:
                values[i - 1, j] = float(cell)
            except ValueError:
                raise DatasetFormatError(
                    f"{path}: non-numeric cell {cell!r} at row {i}, column {header[j]!r}"
                ) from None
    if values.shape[0] < 2:
        raise DatasetFormatError(f"{path}: need at least 2 samples, found {values.shape[0]}")
    if not np.all(np.isfinite(values)):
        raise DatasetFormatError(f"{path}: non-finite values present")
    return Dataset(values[:, x_cols], values[:, y_col])


def write_table(path, header: list[str], table) -> None:
    table = np.asarray(table, dtype=float)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(",".join(header) + "\n")
        for row in table:
            fh.write(",".join(FLOAT_FORMAT % v for v in row) + "\n")


def write_dataset(path, data: Dataset) -> None:
    header = [f"x{j + 1}" for j in range(data.m)] + ["y"]
    write_table(path, header, np.column_stack([data.X, data.y]))


def dumps(doc) -> str:
    # float repr is the shortest string that round-trips exactly
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def write_json(path, doc) -> None:
    text = dumps(doc)
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def load_schema(name: str) -> dict:
    """Load a shipped JSON schema: ``result`` or ``convergence``."""
    text = resources.files("ridge_recovery").joinpath("schemas", f"{name}.schema.json").read_text("utf-8")
    return json.loads(text)
