"""Ideal-gas Euler state algebra and the exact Riemann star-state solver.

The solver finds the pressure p* and velocity u* of the constant region
between the two outer waves of the Riemann problem by solving

    f_L(p) + f_R(p) + (u_R - u_L) = 0,

where each side function takes the Rankine-Hugoniot mass-flux form on the
shock branch (p > p_K) and the isentropic relation on the rarefaction
branch.  Only the star values and the outermost signal speeds are exposed;
there is no similarity-solution sampling.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergenceError, VacuumGeneratedError

#: Relative pressure change below which the star-state iteration stops.
STAR_TOLERANCE = 1e-10

#: Iteration budget for the star-state Newton solve.
STAR_MAX_ITER = 60


@dataclass(frozen=True)
class PrimitiveState:
    """Gas state in primitive variables (density, velocity, pressure)."""

    rho: float
    u: float
    p: float

    def __post_init__(self):
        if not self.rho > 0.0:
            raise ValueError(f"density must be positive, got {self.rho}")
        if not self.p > 0.0:
            raise ValueError(f"pressure must be positive, got {self.p}")


@dataclass(frozen=True)
class ConservedState:
    """Gas state in conserved variables (density, momentum, total energy)."""

    rho: float
    mom: float
    E: float

    def __post_init__(self):
        if not self.rho > 0.0:
            raise ValueError(f"density must be positive, got {self.rho}")
        if not self.E - 0.5 * self.mom**2 / self.rho > 0.0:
            raise ValueError("internal energy must be positive")


@dataclass(frozen=True)
class RiemannProblem:
    """Two constant states separated by a discontinuity, plus gamma."""

    left: PrimitiveState
    right: PrimitiveState
    gamma: float = 1.4

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ValueError(f"gamma must exceed 1, got {self.gamma}")


@dataclass(frozen=True)
class StarRegion:
    """Pressure and velocity of the region between the two outer waves."""

    p_star: float
    u_star: float

    def __post_init__(self):
        if self.p_star < 0.0:
            raise ValueError(f"star pressure must be >= 0, got {self.p_star}")


def sound_speed(s: PrimitiveState, gamma: float) -> float:
    """Ideal-gas sound speed sqrt(gamma p / rho)."""
    return math.sqrt(gamma * s.p / s.rho)


def specific_total_enthalpy(s: PrimitiveState, gamma: float) -> float:
    """H = (E + p) / rho for an ideal gas."""
    e_total = s.p / (gamma - 1.0) + 0.5 * s.rho * s.u**2
    return (e_total + s.p) / s.rho


def primitive_to_conserved(s: PrimitiveState, gamma: float) -> ConservedState:
    """Convert (rho, u, p) to (rho, rho u, E) with E = p/(gamma-1) + rho u^2/2."""
    e_total = s.p / (gamma - 1.0) + 0.5 * s.rho * s.u**2
    return ConservedState(rho=s.rho, mom=s.rho * s.u, E=e_total)


def conserved_to_primitive(q: ConservedState, gamma: float) -> PrimitiveState:
    """Inverse of :func:`primitive_to_conserved`."""
    u = q.mom / q.rho
    p = (gamma - 1.0) * (q.E - 0.5 * q.mom**2 / q.rho)
    return PrimitiveState(rho=q.rho, u=u, p=p)


def physical_flux(s: PrimitiveState, gamma: float) -> np.ndarray:
    """Euler flux triple (rho u, rho u^2 + p, u (E + p))."""
    e_total = s.p / (gamma - 1.0) + 0.5 * s.rho * s.u**2
    return np.array([s.rho * s.u, s.rho * s.u**2 + s.p, s.u * (e_total + s.p)])


def _check_positivity(rp: RiemannProblem) -> tuple[float, float]:
    """Return (c_L, c_R); raise if the data would generate a vacuum."""
    g = rp.gamma
    c_l = sound_speed(rp.left, g)
    c_r = sound_speed(rp.right, g)
    if rp.right.u - rp.left.u >= 2.0 * (c_l + c_r) / (g - 1.0):
        raise VacuumGeneratedError(
            "velocity jump too large: the Riemann solution contains a vacuum"
        )
    return c_l, c_r


def two_rarefaction_pressure(rp: RiemannProblem) -> float:
    """Closed-form star pressure obtained by assuming two rarefaction waves.

    The value bounds the true star pressure from above, which makes it both
    a safe starting guess for the exact solver and the driver of the
    bounding wave-speed estimates.
    """
    g = rp.gamma
    c_l, c_r = _check_positivity(rp)
    z = (g - 1.0) / (2.0 * g)
    num = c_l + c_r - 0.5 * (g - 1.0) * (rp.right.u - rp.left.u)
    den = c_l / rp.left.p**z + c_r / rp.right.p**z
    return (num / den) ** (1.0 / z)


def _side_function(p: float, state: PrimitiveState, c_k: float, gamma: float):
    """Value and derivative of one side of the star-pressure equation."""
    g = gamma
    if p > state.p:
        # shock branch, mass-flux form
        a_k = 2.0 / ((g + 1.0) * state.rho)
        b_k = (g - 1.0) / (g + 1.0) * state.p
        root = math.sqrt(a_k / (b_k + p))
        f = (p - state.p) * root
        df = root * (1.0 - 0.5 * (p - state.p) / (b_k + p))
    else:
        # rarefaction branch, isentropic relation
        ratio = p / state.p
        f = 2.0 * c_k / (g - 1.0) * (ratio ** ((g - 1.0) / (2.0 * g)) - 1.0)
        df = ratio ** (-(g + 1.0) / (2.0 * g)) / (state.rho * c_k)
    return f, df


def solve_star(
    rp: RiemannProblem,
    tol: float = STAR_TOLERANCE,
    max_iter: int = STAR_MAX_ITER,
) -> StarRegion:
    """Solve for the star region with a Newton iteration on the pressure.

    Starts from the two-rarefaction overestimate (floored away from zero),
    so the first step lands at or below the root and the remaining iterates
    increase monotonically towards it.

    Raises VacuumGeneratedError for vacuum-generating data and
    NoConvergenceError if ``max_iter`` steps do not reach ``tol`` relative
    pressure change.
    """
    g = rp.gamma
    c_l, c_r = _check_positivity(rp)
    du = rp.right.u - rp.left.u

    floor = 1e-8 * min(rp.left.p, rp.right.p)
    p = max(two_rarefaction_pressure(rp), floor)

    for _ in range(max_iter):
        f_l, df_l = _side_function(p, rp.left, c_l, g)
        f_r, df_r = _side_function(p, rp.right, c_r, g)
        p_new = p - (f_l + f_r + du) / (df_l + df_r)
        if p_new < floor:
            p_new = floor
        change = 2.0 * abs(p_new - p) / (p_new + p)
        p = p_new
        if change < tol:
            f_l, _ = _side_function(p, rp.left, c_l, g)
            f_r, _ = _side_function(p, rp.right, c_r, g)
            u_star = 0.5 * (rp.left.u + rp.right.u) + 0.5 * (f_r - f_l)
            return StarRegion(p_star=p, u_star=u_star)

    raise NoConvergenceError(
        f"star-pressure iteration did not converge in {max_iter} steps"
    )


def _shock_factor(p_star: float, p_k: float, gamma: float) -> float:
    """Multiplier on the data sound speed giving the shock signal speed."""
    return math.sqrt(1.0 + (gamma + 1.0) / (2.0 * gamma) * (p_star / p_k - 1.0))


def exact_wave_speeds(rp: RiemannProblem) -> tuple[float, float]:
    """Outermost signal speeds (S_L, S_R) of the exact Riemann solution.

    A shocked side travels at u_K -/+ c_K q_K(p*); a rarefied side reports
    the head of the fan at u_K -/+ c_K.
    """
    star = solve_star(rp)
    g = rp.gamma
    c_l = sound_speed(rp.left, g)
    c_r = sound_speed(rp.right, g)

    if star.p_star > rp.left.p:
        s_left = rp.left.u - c_l * _shock_factor(star.p_star, rp.left.p, g)
    else:
        s_left = rp.left.u - c_l

    if star.p_star > rp.right.p:
        s_right = rp.right.u + c_r * _shock_factor(star.p_star, rp.right.p, g)
    else:
        s_right = rp.right.u + c_r

    return s_left, s_right
