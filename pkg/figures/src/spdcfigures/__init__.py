"""Figure rendering for airy-spdc CSV outputs."""

from .csvio import CsvTable, FigureError, read_csv
from .render import FigureSpec, render

__version__ = "0.1.0"
