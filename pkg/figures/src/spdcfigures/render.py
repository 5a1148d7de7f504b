"""Panel renderers: heatmap grids, pump propagation, Schmidt spectra.

Everything drawn comes straight out of the CSV tables; the only
processing is per-panel [0, 1] rescaling for color maps.  A joint
checksum of the inputs is embedded in the PNG metadata so provenance is
verifiable, and the style is pinned so identical inputs give identical
bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .csvio import CsvTable, FigureError, checksum, long_to_map, numeric, read_csv, records

_RC = {
    "figure.dpi": 130,
    "savefig.dpi": 130,
    "font.size": 8,
    "axes.titlesize": 8,
    "axes.labelsize": 8,
    "xtick.labelsize": 7,
    "ytick.labelsize": 7,
    "legend.fontsize": 7,
}

KINDS = ("heatmap_grid", "propagation", "schmidt")


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    inputs: list[Path]
    layout: tuple[int, int]
    output: Path
    style: dict = field(default_factory=dict)

    @classmethod
    def load(cls, path: str | Path, data_root: str | Path = ".") -> "FigureSpec":
        path = Path(path)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise FigureError(f"cannot read figure spec {path}: {exc}") from exc
        kind = raw.get("kind")
        if kind not in KINDS:
            raise FigureError(f"{path}: kind must be one of {KINDS}, got {kind!r}")
        inputs = [Path(data_root) / p for p in raw.get("inputs", [])]
        if not inputs:
            raise FigureError(f"{path}: spec lists no input CSVs")
        layout = tuple(raw.get("layout", (1, len(inputs))))
        if len(layout) != 2 or layout[0] * layout[1] < len(inputs):
            raise FigureError(f"{path}: layout {layout} cannot hold {len(inputs)} panels")
        return cls(
            kind=kind,
            inputs=inputs,
            layout=(int(layout[0]), int(layout[1])),
            output=Path(raw["output"]),
            style=dict(raw.get("style", {})),
        )


def _axis_label(table: CsvTable, key: str, fallback: str) -> str:
    return str(table.meta(key, fallback))


def _panel_title(table: CsvTable) -> str:
    bits = []
    length = table.meta("crystal_length_mm")
    if length is not None:
        bits.append(f"L = {length:g} mm")
    axis = table.meta("axis")
    if axis is not None:
        bits.append(str(axis))
    z = table.meta("z_cm")
    if z is not None:
        bits.append(f"z = {z:g} cm")
    w = table.config("pump.w")
    if not bits and w is not None:
        bits.append(f"w = {w:g}")
    return ", ".join(bits)


def _render_heatmap_grid(spec: FigureSpec, tables: list[CsvTable], fig) -> None:
    rows, cols = spec.layout
    cmap = spec.style.get("cmap", "inferno")
    for i, table in enumerate(tables):
        ax = fig.add_subplot(rows, cols, i + 1)
        ax1, ax2, grid = long_to_map(table)
        peak = grid.max()
        if peak > 0:
            grid = grid / peak
        # axis1 indexes rows, so it runs along the vertical image axis
        ax.imshow(
            grid.T,
            origin="lower",
            extent=(ax1[0], ax1[-1], ax2[0], ax2[-1]),
            aspect="auto",
            cmap=cmap,
            vmin=0.0,
            vmax=1.0,
        )
        ax.set_xlabel(_axis_label(table, "axis1", table.columns[0]))
        ax.set_ylabel(_axis_label(table, "axis2", table.columns[1]))
        ax.set_title(_panel_title(table))


def _render_propagation(spec: FigureSpec, tables: list[CsvTable], fig) -> None:
    rows, cols = spec.layout
    cmap = spec.style.get("cmap", "inferno")
    for i, table in enumerate(tables):
        ax = fig.add_subplot(rows, cols, i + 1)
        zeta, xi, grid = long_to_map(table)
        ax.imshow(
            grid.T,
            origin="lower",
            extent=(zeta[0], zeta[-1], xi[0], xi[-1]),
            aspect="auto",
            cmap=cmap,
            vmin=0.0,
            vmax=1.0,
        )
        ax.set_xlabel(_axis_label(table, "axis1", "zeta"))
        ax.set_ylabel(_axis_label(table, "axis2", "xi"))
        w = table.config("pump.w")
        ax.set_title(f"w = {w:g}" if w is not None else _panel_title(table))


def _schmidt_series(table: CsvTable) -> tuple[np.ndarray, np.ndarray, float]:
    rec = records(table)
    for key in ("lambda", "cumulative", "K"):
        if key not in rec:
            raise FigureError(f"{table.path} lacks the '{key}' records")
    return rec["lambda"], rec["cumulative"], float(rec["K"][0])


def _render_schmidt(spec: FigureSpec, tables: list[CsvTable], fig) -> None:
    """Rows of (log-weight spectrum, cumulative weight) panel pairs.

    Inputs are grouped per row: near-field table then far-field table.
    A dashed vertical marker sits at n = K for each curve.
    """
    if len(tables) % 2:
        raise FigureError("schmidt figure expects near/far table pairs")
    pairs = [(tables[i], tables[i + 1]) for i in range(0, len(tables), 2)]
    n_max = int(spec.style.get("max_modes", 300))
    for row, (near, far) in enumerate(pairs):
        ax_w = fig.add_subplot(len(pairs), 2, 2 * row + 1)
        ax_c = fig.add_subplot(len(pairs), 2, 2 * row + 2)
        for table, color, label in ((near, "tab:blue", "near field"), (far, "tab:red", "far field")):
            lam, cum, k_eff = _schmidt_series(table)
            n = np.arange(1, lam.size + 1)
            keep = n <= n_max
            ax_w.semilogy(n[keep], np.maximum(lam[keep], 1e-16), color=color, label=label)
            ax_c.plot(n[keep], cum[keep], color=color, label=label)
            for ax in (ax_w, ax_c):
                ax.axvline(k_eff, color=color, linestyle=":", linewidth=1.0)
        length = near.meta("crystal_length_mm")
        ax_w.set_title(f"weights, L = {length:g} mm" if length is not None else "weights")
        ax_c.set_title(f"cumulative, L = {length:g} mm" if length is not None else "cumulative")
        ax_w.set_xlabel("mode index n")
        ax_w.set_ylabel("weight")
        ax_c.set_xlabel("mode index n")
        ax_c.set_ylabel("cumulative weight")
        ax_w.set_ylim(float(spec.style.get("weight_floor", 1e-6)), 1.0)
        ax_c.set_ylim(0.0, 1.02)
        ax_c.legend(loc="lower right")


_RENDERERS = {
    "heatmap_grid": _render_heatmap_grid,
    "propagation": _render_propagation,
    "schmidt": _render_schmidt,
}


def render(spec: FigureSpec) -> Path:
    """Draw the figure and write a PNG stamped with the input checksum."""
    tables = [read_csv(p) for p in spec.inputs]
    digest = checksum(spec.inputs)
    size = spec.style.get("size", (3.0 * spec.layout[1], 2.4 * spec.layout[0]))
    with plt.rc_context(_RC):
        fig = plt.figure(figsize=tuple(size))
        try:
            _RENDERERS[spec.kind](spec, tables, fig)
            fig.tight_layout()
            spec.output.parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(
                spec.output,
                format="png",
                metadata={"Software": "spdc-figures", "InputChecksum": digest},
            )
        finally:
            plt.close(fig)
    return spec.output
