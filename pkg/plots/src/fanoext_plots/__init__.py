"""CSV-to-figure rendering for fanoext sweep output."""

from .render import FIGURE_KINDS, FigureSpec, SchemaError, read_sweep_csv, render

__all__ = ["FIGURE_KINDS", "FigureSpec", "SchemaError", "read_sweep_csv", "render"]
