"""Render bound-sweep CSV files as comparison figures.

Consumes only the public CSV contract of the sweep tool (fixed column
names, '#' metadata lines); it never links against the library that
produced the file. Three figure kinds mirror the standard comparisons:
equivocation bounds versus blocklength, mutual-information/codebook bounds
versus blocklength, and the same bounds versus the crossover probability.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

EXIT_OK = 0
EXIT_BAD_ARGS = 2
EXIT_IO = 4

_X_LABELS = {"n": "blocklength n", "eps": "crossover probability ε"}

#: figure kind -> (x column, plotted columns, lower-bound columns that may
#: be clamped at 0 for display)
FIGURE_KINDS = {
    "entropy-vs-n": ("n", ("h_exact", "h_ext_ub", "h_fano_ub"), ()),
    "info-vs-n": (
        "n",
        ("i_exact", "i_ext_lb", "i_fano_lb", "logm_ext_ub", "logm_fano_ub"),
        ("i_ext_lb", "i_fano_lb"),
    ),
    "info-vs-eps": (
        "eps",
        ("i_exact", "i_ext_lb", "i_fano_lb", "logm_ext_ub", "logm_fano_ub"),
        ("i_ext_lb", "i_fano_lb"),
    ),
}


class SchemaError(ValueError):
    """The CSV lacks a column the requested figure kind needs."""


@dataclass(frozen=True)
class FigureSpec:
    input_csv: str
    kind: str
    output_path: str
    clamp_negative: bool = True

    def __post_init__(self):
        if self.kind not in FIGURE_KINDS:
            raise ValueError(
                f"unknown figure kind {self.kind!r}; choose from {sorted(FIGURE_KINDS)}"
            )


def read_sweep_csv(path: str | Path) -> dict[str, list[float]]:
    """Parse a sweep CSV, skipping '#' metadata lines, into float columns."""
    lines = [
        line
        for line in Path(path).read_text().splitlines()
        if line and not line.startswith("#")
    ]
    reader = csv.DictReader(lines)
    columns: dict[str, list[float]] = {name: [] for name in reader.fieldnames or ()}
    for row in reader:
        for name, raw in row.items():
            columns[name].append(float(raw))
    return columns


def render(spec: FigureSpec) -> dict[str, list[float]]:
    """Write one figure and return the exact series that were plotted."""
    x_col, series_cols, clampable = FIGURE_KINDS[spec.kind]
    columns = read_sweep_csv(spec.input_csv)
    for needed in (x_col,) + series_cols:
        if needed not in columns:
            raise SchemaError(f"missing column {needed!r} in {spec.input_csv}")

    x = columns[x_col]
    plotted: dict[str, list[float]] = {x_col: x}
    fig, ax = plt.subplots(figsize=(7, 5))
    for name in series_cols:
        values = columns[name]
        label = name
        if spec.clamp_negative and name in clampable:
            values = [max(0.0, v) for v in values]
            label = f"{name} (clamped at 0)"
        plotted[name] = values
        style = "-" if len(x) > 1 else "o"
        ax.plot(x, values, style, label=label)
    ax.set_xlabel(_X_LABELS[x_col])
    ax.set_ylabel("bits")
    ax.set_title(spec.kind)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.savefig(spec.output_path, dpi=150)
    plt.close(fig)
    return plotted


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanoext-plot",
        description="Render a bound-sweep CSV as a comparison figure",
    )
    parser.add_argument("--input", required=True, help="sweep CSV path")
    parser.add_argument("--kind", required=True, choices=sorted(FIGURE_KINDS))
    parser.add_argument("--output", required=True, help="output image path")
    parser.add_argument(
        "--no-clamp",
        action="store_true",
        help="plot negative lower bounds as computed instead of clamping at 0",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(
        input_csv=args.input,
        kind=args.kind,
        output_path=args.output,
        clamp_negative=not args.no_clamp,
    )
    try:
        render(spec)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
