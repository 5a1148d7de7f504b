"""Reader for the airy-spdc CSV format: '#' header block, then columns."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class FigureError(RuntimeError):
    """Raised for missing, garbled, or empty input data."""


@dataclass(frozen=True)
class CsvTable:
    path: Path
    header: dict
    columns: list[str]
    data: np.ndarray

    def meta(self, key: str, default=None):
        return self.header.get(f"meta.{key}", default)

    def config(self, key: str, default=None):
        return self.header.get(f"config.{key}", default)


def read_csv(path: str | Path) -> CsvTable:
    path = Path(path)
    if not path.exists():
        raise FigureError(f"input CSV not found: {path}")
    header: dict = {}
    columns: list[str] = []
    rows: list[list[str]] = []
    try:
        with path.open(encoding="utf-8") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if not line:
                    continue
                if line.startswith("#"):
                    body = line[1:].strip()
                    if " = " in body:
                        key, _, val = body.partition(" = ")
                        header[key.strip()] = json.loads(val)
                    continue
                if not columns:
                    columns = line.split(",")
                    continue
                rows.append(line.split(","))
        if not columns:
            raise FigureError(f"no column header in {path}")
        data = np.array(rows, dtype=object)
    except FigureError:
        raise
    except Exception as exc:
        raise FigureError(f"garbled CSV {path}: {exc}") from exc
    if data.size == 0:
        raise FigureError(f"no data rows in {path}")
    return CsvTable(path=path, header=header, columns=columns, data=data)


def numeric(table: CsvTable, *names: str) -> tuple[np.ndarray, ...]:
    """Extract named columns as float arrays."""
    out = []
    for name in names:
        if name not in table.columns:
            raise FigureError(f"{table.path} lacks column '{name}'")
        try:
            out.append(table.data[:, table.columns.index(name)].astype(float))
        except ValueError as exc:
            raise FigureError(f"non-numeric values in {table.path} column '{name}'") from exc
    return tuple(out)


def long_to_map(table: CsvTable) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Reshape a long-format (a, b, value) table into axes and a 2D grid."""
    a, b, v = numeric(table, *table.columns[:3])
    ax1 = np.unique(a)
    ax2 = np.unique(b)
    if ax1.size * ax2.size != v.size:
        raise FigureError(f"{table.path} is not a complete grid")
    grid = v.reshape(ax1.size, ax2.size)
    # rows iterate axis2 fastest in the writer; verify and fall back
    if not np.array_equal(a.reshape(ax1.size, ax2.size)[:, 0], ax1):
        grid = v.reshape(ax2.size, ax1.size).T
    return ax1, ax2, grid


def records(table: CsvTable) -> dict[str, np.ndarray]:
    """Group a (record, index, value) table by the record discriminator."""
    if table.columns[:3] != ["record", "index", "value"]:
        raise FigureError(f"{table.path} is not a record table")
    names = table.data[:, 0]
    idx = table.data[:, 1].astype(int)
    vals = table.data[:, 2].astype(float)
    out: dict[str, np.ndarray] = {}
    for name in dict.fromkeys(names):
        mask = names == name
        order = np.argsort(idx[mask], kind="stable")
        out[str(name)] = vals[mask][order]
    return out


def checksum(paths: list[Path]) -> str:
    """Joint sha256 over the input CSV bytes, order-stable."""
    digest = hashlib.sha256()
    for path in paths:
        digest.update(Path(path).name.encode())
        digest.update(Path(path).read_bytes())
    return digest.hexdigest()
