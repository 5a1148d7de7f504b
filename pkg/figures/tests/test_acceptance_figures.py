"""Secondary acceptance: shipped specs regenerate the figure analogs.

Runs the shipped default configs through the primary CLI, renders every
shipped figure spec from the resulting CSVs (no recomputation), and
checks byte-stability under repeated rendering.
"""

import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from spdcfigures.render import FigureSpec, render

REPO = Path(__file__).resolve().parents[2]
CONFIGS = REPO / "configs"
SPECS = REPO / "figures" / "specs"

NEEDED_CONFIGS = [
    "pump1d_w0p02.json",
    "pump1d_w0p1.json",
    "pump1d_w0p5.json",
    "momentum.json",
    "farfield.json",
    "nearfield.json",
    "schmidt_nf_L10mm.json",
    "schmidt_ff_L10mm.json",
    "schmidt_nf_L0p1mm.json",
    "schmidt_ff_L0p1mm.json",
]

FIGURE_SPECS = [
    "fig3_pump_propagation.json",
    "fig5_momentum.json",
    "fig8_farfield_g12.json",
    "fig11_nearfield_g12.json",
    "fig13_schmidt.json",
]


@pytest.fixture(scope="module")
def shipped_csvs(tmp_path_factory) -> Path:
    root = tmp_path_factory.mktemp("shipped")
    for name in NEEDED_CONFIGS:
        cfg = json.loads((CONFIGS / name).read_text())
        out_dir = root / cfg["outputs"]
        proc = subprocess.run(
            [
                sys.executable,
                "-m",
                "airyspdc.cli",
                "run",
                "--config",
                str(CONFIGS / name),
                "--out",
                str(out_dir),
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, f"{name}: {proc.stderr}"
    return root


@pytest.mark.slow
@pytest.mark.parametrize("spec_name", FIGURE_SPECS)
def test_criterion_10_shipped_specs_render_byte_stable(shipped_csvs, spec_name, tmp_path):
    spec = FigureSpec.load(SPECS / spec_name, data_root=shipped_csvs)
    spec = FigureSpec(
        kind=spec.kind,
        inputs=spec.inputs,
        layout=spec.layout,
        output=tmp_path / spec.output.name,
        style=spec.style,
    )
    first = render(spec)
    data1 = first.read_bytes()
    shutil.move(first, first.with_suffix(".first.png"))
    second = render(spec)
    passed = data1 == second.read_bytes() and len(data1) > 0
    print(f"ACCEPTANCE 10 ({spec_name}): {'PASS' if passed else 'FAIL'} ({len(data1)} bytes)")
    assert passed
