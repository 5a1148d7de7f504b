"""Figure rendering entry point: spdc-figures --spec <path> [--data DIR]."""

from __future__ import annotations

import argparse
import sys

from .csvio import FigureError
from .render import FigureSpec, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="spdc-figures",
        description="Render airy-spdc CSV outputs into figure panels",
    )
    parser.add_argument("--spec", required=True, help="figure spec JSON")
    parser.add_argument("--data", default=".", help="root for relative CSV paths in the spec")
    parser.add_argument("--out", default=None, help="override the output image path")
    args = parser.parse_args(argv)
    try:
        spec = FigureSpec.load(args.spec, data_root=args.data)
        if args.out is not None:
            spec = FigureSpec(
                kind=spec.kind,
                inputs=spec.inputs,
                layout=spec.layout,
                output=type(spec.output)(args.out),
                style=spec.style,
            )
        path = render(spec)
    except FigureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
