"""The beta-parametrized family of three-point schemes for linear advection.

Estimating the advection speed lam by s_hat = beta * lam turns the Rusanov
update into the stencil

    q_i^{n+1} = b_{-1} q_{i-1} + b_0 q_i + b_1 q_{i+1},
    b_{-1} = c (1 + beta) / 2,   b_0 = 1 - beta c,   b_1 = c (beta - 1) / 2,

with Courant number c = lam dt / dx.  beta = 1 is the upwind scheme; named
beta(c) functions recover the classical three-point methods.  The stencil
is monotone iff all coefficients are non-negative (1 <= beta <= 1/c) and
von Neumann stable iff c^2 <= beta c <= 1, so underestimating the speed
(beta < 1) costs monotonicity and caps the Courant number at beta, while
overestimating keeps monotonicity and caps it at 1/beta.
"""

import enum
import math
import numbers
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import ZeroMaxSpeedError
from .euler import sound_speed
from .grid import Grid1D, build_grid


class BetaKind(enum.Enum):
    CONSTANT = "constant"
    UPWIND = "upwind"
    LAX_WENDROFF = "lax_wendroff"
    LAX_FRIEDRICHS = "lax_friedrichs"
    FORCE = "force"
    GODUNOV_CENTRED = "godunov_centred"
    FTCS = "ftcs"
    FORCE_ALPHA = "force_alpha"


@dataclass(frozen=True)
class BetaSpec:
    """A wave-speed multiplier rule beta(c), fixed or Courant-dependent."""

    kind: BetaKind
    param: Optional[float] = None

    def __post_init__(self):
        if self.kind is BetaKind.CONSTANT:
            if self.param is None or self.param < 0.0:
                raise ValueError(f"constant beta must be >= 0, got {self.param}")
        elif self.kind is BetaKind.FORCE_ALPHA:
            if self.param is None or self.param <= 0.0:
                raise ValueError(f"alpha must be > 0, got {self.param}")
        elif self.param is not None:
            raise ValueError(f"{self.kind.value} takes no parameter")

    @classmethod
    def constant(cls, beta: float) -> "BetaSpec":
        return cls(BetaKind.CONSTANT, float(beta))

    @classmethod
    def force_alpha(cls, alpha: float) -> "BetaSpec":
        return cls(BetaKind.FORCE_ALPHA, float(alpha))

    @classmethod
    def named(cls, name: str) -> "BetaSpec":
        return cls(BetaKind(name))

    def beta(self, c: float) -> float:
        """Evaluate beta at Courant number c > 0."""
        if c <= 0.0:
            raise ValueError(f"Courant number must be positive, got {c}")
        k = self.kind
        if k is BetaKind.CONSTANT:
            return self.param
        if k is BetaKind.UPWIND:
            return 1.0
        if k is BetaKind.LAX_WENDROFF:
            return c
        if k is BetaKind.LAX_FRIEDRICHS:
            return 1.0 / c
        if k is BetaKind.FORCE:
            return (1.0 + c**2) / (2.0 * c)
        if k is BetaKind.GODUNOV_CENTRED:
            return 2.0 * c
        if k is BetaKind.FTCS:
            return 0.0
        # FORCE_ALPHA
        return 0.5 * (1.0 / (self.param * c) + self.param * c)


class Direction(enum.Enum):
    UNDER = "under"
    OVER = "over"


@dataclass(frozen=True)
class PerturbationSpec:
    """Constant displacement of the exact speed: beta = 1 -/+ epsilon."""

    direction: Direction
    epsilon: float

    def __post_init__(self):
        if self.direction is Direction.UNDER and not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"underestimate epsilon must lie in [0, 1], got {self.epsilon}")
        if self.direction is Direction.OVER and self.epsilon < 0.0:
            raise ValueError(f"overestimate epsilon must be >= 0, got {self.epsilon}")

    @classmethod
    def under(cls, epsilon: float) -> "PerturbationSpec":
        return cls(Direction.UNDER, float(epsilon))

    @classmethod
    def over(cls, epsilon: float) -> "PerturbationSpec":
        return cls(Direction.OVER, float(epsilon))

    def beta(self, c: float) -> float:
        if self.direction is Direction.UNDER:
            return 1.0 - self.epsilon
        return 1.0 + self.epsilon


@dataclass(frozen=True)
class SchemeCoefficients1D:
    """Stencil weights (b_{-1}, b_0, b_1); they always sum to one."""

    b_m1: float
    b_0: float
    b_p1: float

    def as_array(self) -> np.ndarray:
        return np.array([self.b_m1, self.b_0, self.b_p1])


def coefficients(beta: float, c: float) -> SchemeCoefficients1D:
    """Stencil weights of the scheme with estimate multiplier beta at Courant c."""
    if c <= 0.0:
        raise ValueError(f"Courant number must be positive, got {c}")
    if beta < 0.0:
        raise ValueError(f"beta must be >= 0, got {beta}")
    return SchemeCoefficients1D(
        b_m1=0.5 * c * (1.0 + beta),
        b_0=1.0 - beta * c,
        b_p1=0.5 * c * (-1.0 + beta),
    )


def viscous_form(beta: float, c: float) -> float:
    """Diffusion weight d = beta c of the central-plus-diffusion rewrite.

    The update q_i - c (q_{i+1} - q_{i-1})/2 + d (q_{i+1} - 2 q_i + q_{i-1})/2
    reproduces the stencil of :func:`coefficients` identically.
    """
    if c <= 0.0:
        raise ValueError(f"Courant number must be positive, got {c}")
    return beta * c


def numerical_viscosity(beta: float, c: float, dx: float, lam: float) -> float:
    """Leading truncation-error diffusion coefficient dx lam (beta - c) / 2.

    Zero for beta = c (second order), negative below it (anti-diffusive,
    unconditionally unstable).
    """
    if c <= 0.0:
        raise ValueError(f"Courant number must be positive, got {c}")
    return 0.5 * dx * lam * (beta - c)


def is_monotone(beta: float, c: float) -> bool:
    """True iff all stencil weights are non-negative (1 <= beta <= 1/c)."""
    b = coefficients(beta, c)
    return b.b_m1 >= 0.0 and b.b_0 >= 0.0 and b.b_p1 >= 0.0


def stability_limit(spec: Union[BetaSpec, PerturbationSpec]) -> float:
    """Largest stable Courant number of the scheme family described by spec.

    Constant beta meets the stability strip c^2 <= beta c <= 1 at beta when
    underestimating and at 1/beta when overestimating; the Courant-dependent
    classics follow from the same strip.
    """
    if isinstance(spec, PerturbationSpec):
        if spec.direction is Direction.UNDER:
            return 1.0 - spec.epsilon
        return 1.0 / (1.0 + spec.epsilon)

    k = spec.kind
    if k is BetaKind.CONSTANT:
        if spec.param <= 0.0:
            return 0.0
        return spec.param if spec.param < 1.0 else 1.0 / spec.param
    if k in (BetaKind.UPWIND, BetaKind.LAX_WENDROFF, BetaKind.LAX_FRIEDRICHS, BetaKind.FORCE):
        return 1.0
    if k is BetaKind.GODUNOV_CENTRED:
        return 0.5 * math.sqrt(2.0)
    if k is BetaKind.FTCS:
        return 0.0
    # FORCE_ALPHA: intersection of beta(c; alpha) with 1/c
    return math.sqrt(2.0 * spec.param - 1.0) / spec.param


def step(q: np.ndarray, coeffs: SchemeCoefficients1D) -> np.ndarray:
    """Apply the three-point stencil once with periodic (modular) indexing."""
    return (
        coeffs.b_m1 * np.roll(q, 1) + coeffs.b_0 * q + coeffs.b_p1 * np.roll(q, -1)
    )


def square_wave(x: np.ndarray) -> np.ndarray:
    """Unit box on [1/4, 3/4] of the unit interval."""
    return np.where((x >= 0.25) & (x <= 0.75), 1.0, 0.0)


@dataclass(frozen=True)
class AdvectionRun:
    """Final state and error norms of a periodic advection experiment.

    ``t_end = n_steps * c * dx`` is the reached time; it differs from the
    requested ``t_out`` by at most half a step.
    """

    grid: Grid1D
    beta: float
    courant: float
    t_out: float
    t_end: float
    n_steps: int
    q: np.ndarray
    q_exact: np.ndarray
    linf_error: float
    l1_error: float
    q_max: float
    q_min: float


def advect_square_wave(n_cells: int, beta: float, c: float, t_out: float) -> AdvectionRun:
    """March the square wave over the periodic unit domain at speed one.

    Every step runs at exactly the requested Courant number; the march
    stops after the whole number of steps closest to t_out.  The Courant
    number is the object under study here, and shrinking a final partial
    step to land on t_out exactly would filter precisely the
    high-frequency modes that carry a near-threshold instability, so the
    output time is quantized instead and the error norms are taken against
    the exact solution at the reached time.  Instability is reported
    through the norms, never raised.
    """
    grid = build_grid(n_cells, 0.0, 1.0)
    lam = 1.0
    x = grid.cell_centers()
    q = square_wave(x)

    dt = c * grid.dx / lam
    n_steps = round(t_out / dt) if t_out > 0.0 else 0
    coeffs = coefficients(beta, c)
    for _ in range(n_steps):
        q = step(q, coeffs)
    t_end = n_steps * dt

    q_exact = square_wave(np.mod(x - lam * t_end, 1.0))
    diff = q - q_exact
    return AdvectionRun(
        grid=grid,
        beta=beta,
        courant=c,
        t_out=t_out,
        t_end=t_end,
        n_steps=n_steps,
        q=q,
        q_exact=q_exact,
        linf_error=float(np.max(np.abs(diff))),
        l1_error=float(np.sum(np.abs(diff)) * grid.dx),
        q_max=float(np.max(q)),
        q_min=float(np.min(q)),
    )


def write_profile_csv(run: AdvectionRun, fh) -> None:
    fh.write("x,q_numerical,q_exact\n")
    for x, qn, qe in zip(run.grid.cell_centers(), run.q, run.q_exact):
        fh.write(f"{x:.9g},{qn:.9g},{qe:.9g}\n")


def write_norms_csv(run: AdvectionRun, fh) -> None:
    fh.write("beta,c,T,Linf,L1,qmax,qmin\n")
    fh.write(
        f"{run.beta:.9g},{run.courant:.9g},{run.t_out:.9g},"
        f"{run.linf_error:.9g},{run.l1_error:.9g},{run.q_max:.9g},{run.q_min:.9g}\n"
    )


def compute_time_step(
    states,
    dx: float,
    c_cfl: float = 1.0,
    c_lim: float = 1.0,
    gamma: float = 1.4,
) -> float:
    """CFL time step dt = c_cfl * c_lim * dx / S_max.

    ``states`` is either a single advection speed (S_max = |lam|) or an
    iterable of gas states, for which S_max = max(|u_i| + c_i) over the
    data.  Evaluating eigenvalues on the data underestimates post-wave
    signal speeds (quiescent data report only max c_i), so c_cfl < 1 is the
    usual safety margin.
    """
    if dx <= 0.0:
        raise ValueError(f"dx must be positive, got {dx}")
    if not 0.0 < c_cfl <= 1.0:
        raise ValueError(f"c_cfl must lie in (0, 1], got {c_cfl}")

    if isinstance(states, numbers.Real):
        s_max = abs(float(states))
    else:
        states = list(states)
        if not states:
            raise ValueError("need at least one state")
        s_max = max(abs(s.u) + sound_speed(s, gamma) for s in states)

    if s_max == 0.0:
        raise ZeroMaxSpeedError("all signal speeds vanish; time step is unbounded")
    return c_cfl * c_lim * dx / s_max
