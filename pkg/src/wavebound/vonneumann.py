"""Amplification factors and numerical stability sweeps.

The Fourier symbol of the 1D three-point stencil is

    G(theta) = b_{-1} e^{-i theta} + b_0 + b_1 e^{i theta},

and of the 2D five-point stencil

    G(tx, ty) = g_{-1} e^{-i tx} + g_0 + g_1 e^{i tx}
              + d_{-1} e^{-i ty} + d_1 e^{i ty}.

A scheme counts as stable when max |G| over a uniform angle grid stays
within 1 + tol; ties at |G| = 1 (neutral stability) are stable.  The 2D
sweep evaluates the maximum over a full Courant-number grid, which is the
expensive part: the default 200^2 x 128^2 map is ~6.5e8 evaluations, so
the kernel is vectorized in blocks and optionally threaded (the
WAVEBOUND_THREADS environment variable caps the worker count).
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .schemes1d import BetaSpec, PerturbationSpec, SchemeCoefficients1D
from .schemes2d import SchemeCoefficients2D

#: Slack on |G| above which an angle counts as unstable.
DEFAULT_TOLERANCE = 1e-10

#: Default angle samples per dimension; |G|^2 is a degree-1 trigonometric
#: polynomial per angle, so extrema are resolved far below map resolution.
DEFAULT_ANGLE_RESOLUTION = 128

#: Default Courant samples for the 1D stability-limit search.
DEFAULT_C_RESOLUTION = 512

#: Default Courant grid per axis of a 2D stability map.
DEFAULT_GRID_RESOLUTION = 200


def resolve_threads(threads: Optional[int] = None) -> int:
    """Worker count: explicit argument, else WAVEBOUND_THREADS, else CPU count."""
    if threads is None:
        env = os.environ.get("WAVEBOUND_THREADS")
        threads = int(env) if env else (os.cpu_count() or 1)
    if threads < 1:
        raise ValueError(f"thread count must be >= 1, got {threads}")
    return threads


def amplification_1d(coeffs: SchemeCoefficients1D, theta):
    """|G(theta)| of the three-point stencil; theta may be an array."""
    theta = np.asarray(theta, dtype=float)
    g = coeffs.b_m1 * np.exp(-1j * theta) + coeffs.b_0 + coeffs.b_p1 * np.exp(1j * theta)
    out = np.abs(g)
    return float(out) if out.ndim == 0 else out


def amplification_2d(coeffs: SchemeCoefficients2D, theta_x, theta_y):
    """|G(theta_x, theta_y)| of the five-point stencil; angles may be arrays."""
    tx = np.asarray(theta_x, dtype=float)
    ty = np.asarray(theta_y, dtype=float)
    g = (
        coeffs.g_m1 * np.exp(-1j * tx)
        + coeffs.g_0
        + coeffs.g_p1 * np.exp(1j * tx)
        + coeffs.d_m1 * np.exp(-1j * ty)
        + coeffs.d_p1 * np.exp(1j * ty)
    )
    out = np.abs(g)
    return float(out) if out.ndim == 0 else out


def stability_limit_1d_numeric(
    spec: Union[BetaSpec, PerturbationSpec],
    c_resolution: int = DEFAULT_C_RESOLUTION,
    angle_resolution: int = DEFAULT_ANGLE_RESOLUTION,
    c_max: float = 1.0,
    tol: float = DEFAULT_TOLERANCE,
) -> float:
    """Largest sampled Courant number with max |G| <= 1 + tol (0.0 if none).

    Samples c at k/c_resolution * c_max for k = 1..c_resolution, so the
    result sits within one grid spacing of the analytic limit.
    """
    if c_resolution < 64 or angle_resolution < 64:
        raise ValueError("resolutions below 64 cannot resolve the stability edge")
    cs = c_max * np.arange(1, c_resolution + 1) / c_resolution
    betas = np.array([spec.beta(c) for c in cs])

    b_m1 = 0.5 * cs * (1.0 + betas)
    b_0 = 1.0 - betas * cs
    b_p1 = 0.5 * cs * (-1.0 + betas)

    theta = np.linspace(0.0, 2.0 * np.pi, angle_resolution, endpoint=False)
    cos_t, sin_t = np.cos(theta), np.sin(theta)

    re = b_0[:, None] + (b_m1 + b_p1)[:, None] * cos_t[None, :]
    im = (b_m1 - b_p1)[:, None] * sin_t[None, :]
    gmax2 = np.max(re * re + im * im, axis=1)

    stable = np.nonzero(gmax2 <= (1.0 + tol) ** 2)[0]
    if stable.size == 0:
        return 0.0
    return float(cs[stable[-1]])


@dataclass(frozen=True)
class StabilityMap:
    """Boolean stability grid over Courant-number space.

    ``stable[i, j]`` refers to the pair (cx_values[i], cy_values[j]).
    """

    cx_values: np.ndarray
    cy_values: np.ndarray
    stable: np.ndarray
    tolerance: float

    def __post_init__(self):
        if self.stable.shape != (self.cx_values.size, self.cy_values.size):
            raise ValueError("stable grid shape does not match the Courant grids")


def _sweep_max_g2(bc_x, cx, bc_y, cy, angle_n, threads, block=16):
    """max over the angle grid of |G|^2 for every Courant pair.

    With s_d = beta_d c_d the symbol is
    G = 1 - bc_x (1 - cos tx) - bc_y (1 - cos ty) - i (cx sin tx + cy sin ty).
    G(2 pi - tx, 2 pi - ty) is the conjugate of G(tx, ty), so sweeping tx
    over [0, pi] against the full ty grid covers every sampled modulus.
    """
    theta = np.linspace(0.0, 2.0 * np.pi, angle_n, endpoint=False)
    one_m_cos = 1.0 - np.cos(theta)
    sin_t = np.sin(theta)
    half = angle_n // 2 + 1

    ay = np.multiply.outer(bc_y, one_m_cos)  # (nj, nt)
    sy = np.multiply.outer(cy, sin_t)

    ni = bc_x.size
    out = np.empty((ni, bc_y.size))

    def run_block(i0):
        i1 = min(i0 + block, ni)
        acc = np.zeros((i1 - i0, bc_y.size))
        for k in range(half):
            re = (1.0 - bc_x[i0:i1, None, None] * one_m_cos[k]) - ay[None, :, :]
            im = (cx[i0:i1, None, None] * sin_t[k]) + sy[None, :, :]
            np.maximum(acc, np.max(re * re + im * im, axis=2), out=acc)
        out[i0:i1] = acc

    starts = range(0, ni, block)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(run_block, starts))
    else:
        for i0 in starts:
            run_block(i0)
    return out


def _sweep_map(bc_x, cx, bc_y, cy, angle_n, tol, threads):
    gmax2 = _sweep_max_g2(bc_x, cx, bc_y, cy, angle_n, resolve_threads(threads))
    return gmax2 <= (1.0 + tol) ** 2


def stability_map_2d(
    beta,
    cx_max: float = 1.0,
    cy_max: float = 1.0,
    grid_n: int = DEFAULT_GRID_RESOLUTION,
    angle_n: int = DEFAULT_ANGLE_RESOLUTION,
    tol: float = DEFAULT_TOLERANCE,
    threads: Optional[int] = None,
) -> StabilityMap:
    """Numerical stability region of the constant-beta 2D scheme.

    ``beta`` is a single multiplier for both directions or a
    (beta_x, beta_y) pair.  For beta >= 1 the stable set is the triangle
    |cx| + |cy| <= 1/beta, which the sweep recovers to grid resolution.
    """
    if grid_n < 64 or angle_n < 64:
        raise ValueError("resolutions below 64 cannot resolve the stability edge")
    beta_x, beta_y = beta if isinstance(beta, tuple) else (beta, beta)
    if beta_x < 0.0 or beta_y < 0.0:
        raise ValueError("beta multipliers must be >= 0")
    cx = np.linspace(0.0, cx_max, grid_n)
    cy = np.linspace(0.0, cy_max, grid_n)
    stable = _sweep_map(beta_x * cx, cx, beta_y * cy, cy, angle_n, tol, threads)
    return StabilityMap(cx_values=cx, cy_values=cy, stable=stable, tolerance=tol)


def stability_map_2d_force_alpha(
    alpha: float,
    cx_max: float = 1.0,
    cy_max: float = 1.0,
    grid_n: int = DEFAULT_GRID_RESOLUTION,
    angle_n: int = DEFAULT_ANGLE_RESOLUTION,
    tol: float = DEFAULT_TOLERANCE,
    threads: Optional[int] = None,
) -> StabilityMap:
    """Stability region of the 2D scheme with beta(c; alpha) per direction.

    The dissipation product beta(c; alpha) c = (1/alpha + alpha c^2) / 2
    stays positive as c -> 0, so these maps differ from constant-beta ones
    even on the axes.
    """
    if alpha <= 0.0:
        raise ValueError(f"alpha must be > 0, got {alpha}")
    if grid_n < 64 or angle_n < 64:
        raise ValueError("resolutions below 64 cannot resolve the stability edge")
    cx = np.linspace(0.0, cx_max, grid_n)
    cy = np.linspace(0.0, cy_max, grid_n)
    bc_x = 0.5 * (1.0 / alpha + alpha * cx**2)
    bc_y = 0.5 * (1.0 / alpha + alpha * cy**2)
    stable = _sweep_map(bc_x, cx, bc_y, cy, angle_n, tol, threads)
    return StabilityMap(cx_values=cx, cy_values=cy, stable=stable, tolerance=tol)


def region_area(smap: StabilityMap) -> float:
    """Stable fraction of the sampled Courant rectangle."""
    return float(np.count_nonzero(smap.stable)) / smap.stable.size


def axis_intercept(smap: StabilityMap) -> float:
    """Largest stable cx on the cy = 0 axis (0.0 if none)."""
    idx = np.nonzero(smap.stable[:, 0])[0]
    if idx.size == 0:
        return 0.0
    return float(smap.cx_values[idx[-1]])


def write_map_csv(smap: StabilityMap, fh) -> None:
    fh.write("cx,cy,stable\n")
    for i, cx in enumerate(smap.cx_values):
        for j, cy in enumerate(smap.cy_values):
            fh.write(f"{cx:.9g},{cy:.9g},{int(smap.stable[i, j])}\n")


def write_map_pgm(smap: StabilityMap, fh) -> None:
    """Plain-text greyscale image: 255 = stable, 0 = unstable.

    Row order follows image convention: the top row is the largest cy, so
    plots read with the origin at the lower left.
    """
    ni, nj = smap.stable.shape
    fh.write(f"P2\n{ni} {nj}\n255\n")
    for j in range(nj - 1, -1, -1):
        fh.write(" ".join("255" if smap.stable[i, j] else "0" for i in range(ni)))
        fh.write("\n")
