"""Render wavebound CSV/PGM experiment outputs into PNG figures.

Five figure kinds are supported, one per documented file schema:

- ``beta_curves``: the beta(c) curves CSV (``c`` plus ``beta_*`` columns),
- ``stability_limit``: the 1D limits CSV (``kind,param,c_lim_analytic,
  c_lim_numeric``), drawing the under/over perturbation branches,
- ``profile``: advection profile CSVs (``x,q_numerical,q_exact``),
  overlaying one or more runs against the exact solution,
- ``heatmap``: a stability-map PGM, written pixel-per-cell so the image
  dimensions equal the map grid (stable cells yellow),
- ``area_bars``: the stability-area summary CSV (``beta,area_fraction``).

Rendering never mutates its inputs, and a re-render of the same inputs
produces byte-identical output (the PNG metadata carries no timestamps).
"""

import csv
import enum
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from PIL import Image

STABLE_COLOR = (240, 220, 50)
UNSTABLE_COLOR = (60, 50, 110)

#: Curve labels for the known beta-curve columns; others fall back to the
#: raw column name.
CURVE_LABELS = {
    "beta_LW": "LW",
    "beta_GU": "GU",
    "beta_FO": "FO",
    "beta_LF": "LF",
    "beta_GC": "GC",
    "beta_FTCS": "FTCS",
}


class SchemaError(ValueError):
    """An input file does not match its documented schema."""


class FigureKind(enum.Enum):
    BETA_CURVES = "beta_curves"
    STABILITY_LIMIT = "stability_limit"
    PROFILE = "profile"
    HEATMAP = "heatmap"
    AREA_BARS = "area_bars"


@dataclass(frozen=True)
class PlotJob:
    kind: FigureKind
    inputs: tuple
    output: Path

    def __post_init__(self):
        if not self.inputs:
            raise SchemaError("a plot job needs at least one input file")
        single = self.kind is not FigureKind.PROFILE
        if single and len(self.inputs) != 1:
            raise SchemaError(f"{self.kind.value} takes exactly one input file")


def _read_csv(path, required_columns):
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise SchemaError(f"{path}: empty file") from None
            rows = [row for row in reader if row]
    except OSError as exc:
        raise SchemaError(f"{path}: {exc}") from None
    missing = [col for col in required_columns if col not in header]
    if missing:
        raise SchemaError(f"{path}: missing columns {', '.join(missing)}")
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    if any(len(row) != len(header) for row in rows):
        raise SchemaError(f"{path}: ragged rows")
    return header, rows


def _columns(path, header, rows, names):
    out = []
    for name in names:
        idx = header.index(name)
        try:
            out.append(np.array([float(row[idx]) for row in rows]))
        except ValueError:
            raise SchemaError(f"{path}: non-numeric value in column {name}") from None
    return out


def _read_pgm(path):
    try:
        tokens = Path(path).read_text().split()
    except (OSError, UnicodeDecodeError) as exc:
        raise SchemaError(f"{path}: {exc}") from None
    if not tokens or tokens[0] != "P2":
        raise SchemaError(f"{path}: not a plain-text PGM (P2) file")
    try:
        width, height, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
        values = np.array([int(t) for t in tokens[4:]])
    except (IndexError, ValueError):
        raise SchemaError(f"{path}: malformed PGM header or pixel data") from None
    if maxval <= 0 or values.size != width * height:
        raise SchemaError(
            f"{path}: expected {width * height} pixels, found {values.size}"
        )
    return values.reshape(height, width), maxval


def _new_axes():
    fig, ax = plt.subplots(figsize=(6.4, 4.8), dpi=100)
    return fig, ax


def _save(fig, output):
    output = Path(output)
    output.parent.mkdir(parents=True, exist_ok=True)
    # strip the library's version string so re-renders are byte-identical
    # across patch upgrades, not only within one environment
    fig.savefig(output, format="png", metadata={"Software": None})
    plt.close(fig)
    return output


def _render_beta_curves(job):
    header, rows = _read_csv(job.inputs[0], ["c"])
    names = [name for name in header if name != "c"]
    if not names:
        raise SchemaError(f"{job.inputs[0]}: no beta columns")
    (c,) = _columns(job.inputs[0], header, rows, ["c"])
    fig, ax = _new_axes()
    for name in names:
        (values,) = _columns(job.inputs[0], header, rows, [name])
        label = CURVE_LABELS.get(name, name.removeprefix("beta_"))
        ax.plot(c, values, label=label)
    ax.set_xlabel("Courant number c")
    ax.set_ylabel("beta(c)")
    ax.set_ylim(0.0, 4.0)
    ax.legend(loc="upper right", ncol=2, fontsize="small")
    ax.set_title("Wave-speed multipliers of classical schemes")
    return _save(fig, job.output)


def _render_stability_limit(job):
    header, rows = _read_csv(
        job.inputs[0], ["kind", "param", "c_lim_analytic", "c_lim_numeric"]
    )
    kind_idx = header.index("kind")
    fig, ax = _new_axes()
    drew = False
    for kind, style, label in (
        ("under", "C1", "underestimate (non-monotone)"),
        ("over", "C0", "overestimate (monotone)"),
    ):
        branch = [row for row in rows if row[kind_idx] == kind]
        if not branch:
            continue
        param, analytic, numeric = _columns(
            job.inputs[0], header, branch, ["param", "c_lim_analytic", "c_lim_numeric"]
        )
        order = np.argsort(param)
        ax.plot(param[order], analytic[order], style + "-", label=label)
        ax.plot(param[order], numeric[order], style, marker="o", linestyle="none",
                markersize=3.5, label=f"{kind} (swept)")
        drew = True
    if not drew:
        raise SchemaError(f"{job.inputs[0]}: no under/over rows to draw")
    ax.set_xlabel("perturbation epsilon")
    ax.set_ylabel("stability limit c_lim")
    ax.set_ylim(0.0, 1.05)
    ax.legend(fontsize="small")
    ax.set_title("Stability limit under wave-speed perturbation")
    return _save(fig, job.output)


def _render_profile(job):
    fig, ax = _new_axes()
    exact_drawn = False
    for path in job.inputs:
        header, rows = _read_csv(path, ["x", "q_numerical", "q_exact"])
        x, q_num, q_exact = _columns(path, header, rows, ["x", "q_numerical", "q_exact"])
        if not exact_drawn:
            ax.plot(x, q_exact, "k-", linewidth=1.0, label="exact")
            exact_drawn = True
        ax.plot(x, q_num, marker=".", markersize=3, linewidth=0.8,
                label=Path(path).stem)
    ax.set_xlabel("x")
    ax.set_ylabel("q")
    ax.legend(fontsize="small")
    ax.set_title("Advected profile vs exact solution")
    return _save(fig, job.output)


def _render_heatmap(job):
    values, maxval = _read_pgm(job.inputs[0])
    stable = values >= (maxval + 1) // 2
    rgb = np.where(stable[..., None], STABLE_COLOR, UNSTABLE_COLOR).astype(np.uint8)
    output = Path(job.output)
    output.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(rgb, mode="RGB").save(output, format="PNG")
    return output


def _render_area_bars(job):
    header, rows = _read_csv(job.inputs[0], ["beta", "area_fraction"])
    beta_idx = header.index("beta")
    labels = [row[beta_idx] for row in rows]
    (fractions,) = _columns(job.inputs[0], header, rows, ["area_fraction"])
    fig, ax = _new_axes()
    ax.bar(range(len(labels)), fractions, color="C0")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=30, ha="right", fontsize="small")
    ax.set_xlabel("scheme")
    ax.set_ylabel("stable fraction of the Courant rectangle")
    ax.set_title("Stability-region sizes")
    return _save(fig, job.output)


_RENDERERS = {
    FigureKind.BETA_CURVES: _render_beta_curves,
    FigureKind.STABILITY_LIMIT: _render_stability_limit,
    FigureKind.PROFILE: _render_profile,
    FigureKind.HEATMAP: _render_heatmap,
    FigureKind.AREA_BARS: _render_area_bars,
}


def render(job: PlotJob) -> Path:
    """Render one figure; raises SchemaError on malformed input."""
    return _RENDERERS[job.kind](job)
