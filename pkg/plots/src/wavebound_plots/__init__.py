"""Figure rendering for wavebound experiment outputs."""

from .render import FigureKind, PlotJob, SchemaError, render

__version__ = "0.1.0"
