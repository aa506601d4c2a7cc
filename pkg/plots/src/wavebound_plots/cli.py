"""Command-line figure renderer: plot <kind> <input...> -o <output.png>."""

import argparse
import sys
from pathlib import Path

from .render import FigureKind, PlotJob, SchemaError, render


def build_parser():
    parser = argparse.ArgumentParser(
        prog="plot",
        description="Render wavebound CSV/PGM outputs into PNG figures",
    )
    parser.add_argument("kind", choices=[k.value for k in FigureKind])
    parser.add_argument("inputs", nargs="+", metavar="input")
    parser.add_argument("-o", "--output", required=True, help="output PNG path")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    job_kind = FigureKind(args.kind)
    try:
        job = PlotJob(kind=job_kind, inputs=tuple(args.inputs), output=Path(args.output))
        written = render(job)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(written)
    return 0


if __name__ == "__main__":
    sys.exit(main())
