"""Numerical fluxes: two-wave (HLL), one-wave (Rusanov) and centred variants.

The scalar advection fluxes are written so that the (1 + beta) weight sits
on the upwind value for positive advection speed; substituting them into
the conservative update reproduces the three-point stencil coefficients
used throughout the scheme analysis (upwind at beta = 1, central at
beta = 0).
"""

from .errors import DegenerateSpeedsError


def hll_flux(q_l, q_r, f_l, f_r, s_left: float, s_right: float):
    """Two-wave flux: one-sided when both speeds share a sign, else averaged.

    States and fluxes may be scalars or arrays of matching shape.  Raises
    DegenerateSpeedsError when the middle branch is selected but the wave
    speeds coincide (or are not ordered), which leaves the average
    undefined.
    """
    if s_left >= 0.0:
        return f_l
    if s_right <= 0.0:
        return f_r
    if not s_left < 0.0 < s_right:
        raise DegenerateSpeedsError(
            f"wave speeds ({s_left}, {s_right}) select no branch"
        )
    return (s_right * f_l - s_left * f_r + s_left * s_right * (q_r - q_l)) / (
        s_right - s_left
    )


def rusanov_flux(q_l, q_r, f_l, f_r, s_hat: float):
    """One-wave flux (f_L + f_R)/2 - s_hat (q_R - q_L)/2.

    Equals :func:`hll_flux` with the symmetric speed pair (-s_hat, +s_hat).
    """
    return 0.5 * (f_l + f_r) - 0.5 * s_hat * (q_r - q_l)


def scalar_rusanov_flux(q_left: float, q_right: float, lam: float, beta: float) -> float:
    """Rusanov flux for scalar advection with estimated speed beta * lam.

    For lam > 0 this is (1+beta)/2 * lam q_left + (1-beta)/2 * lam q_right:
    pure upwind at beta = 1, the forward-in-time central flux at beta = 0.
    """
    if lam <= 0.0:
        raise ValueError(f"advection speed must be positive, got {lam}")
    return 0.5 * (1.0 + beta) * lam * q_left + 0.5 * (1.0 - beta) * lam * q_right


def force_alpha_flux(q_left: float, q_right: float, lam: float, c: float, alpha: float) -> float:
    """Monotone centred flux family with weight r = (1 + alpha^2 c^2) / (2 alpha c).

    Identical to :func:`scalar_rusanov_flux` with
    beta = (1/(alpha c) + alpha c) / 2; alpha = 1 recovers the classic
    centred monotone scheme.
    """
    if alpha <= 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if c <= 0.0:
        raise ValueError(f"Courant number must be positive, got {c}")
    r = (1.0 + alpha**2 * c**2) / (2.0 * alpha * c)
    return 0.5 * (1.0 + r) * lam * q_left + 0.5 * (1.0 - r) * lam * q_right
