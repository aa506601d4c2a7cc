"""Wave-speed estimates, monotonicity and stability of Rusanov-type schemes.

The package has three layers: an exact Riemann star-state solver for the
1D ideal-gas Euler equations with the classical wave-speed estimators
measured against it (``euler``, ``estimators``); the beta-parametrized
family of one-wave schemes for linear advection in one and two space
dimensions (``fluxes``, ``schemes1d``, ``schemes2d``); and von Neumann
amplification sweeps that map the stability consequences of over- and
underestimated wave speeds (``vonneumann``).  The ``wavebound`` CLI runs
the standard experiments and writes CSV/PGM datasets.
"""

from .errors import (
    DegenerateSpeedsError,
    ImaginarySoundSpeedError,
    NoConvergenceError,
    VacuumGeneratedError,
    WaveboundError,
    ZeroMaxSpeedError,
)
from .estimators import (
    BOUND_TOLERANCE,
    STANDARD_TESTS,
    EstimatorId,
    EstimatorTableRow,
    WaveSpeedPair,
    batten,
    davis_a,
    davis_b,
    einfeldt,
    estimator_table,
    rusanov_speed,
    toro,
    two_rarefaction_pressure,
    write_estimator_table_csv,
)
from .euler import (
    ConservedState,
    PrimitiveState,
    RiemannProblem,
    StarRegion,
    conserved_to_primitive,
    exact_wave_speeds,
    physical_flux,
    primitive_to_conserved,
    solve_star,
    sound_speed,
    specific_total_enthalpy,
)
from .fluxes import force_alpha_flux, hll_flux, rusanov_flux, scalar_rusanov_flux
from .grid import CourantPair, Grid1D, RunConfig, build_grid
from .schemes1d import (
    AdvectionRun,
    BetaKind,
    BetaSpec,
    Direction,
    PerturbationSpec,
    SchemeCoefficients1D,
    advect_square_wave,
    coefficients,
    compute_time_step,
    is_monotone,
    numerical_viscosity,
    square_wave,
    stability_limit,
    step,
    viscous_form,
    write_norms_csv,
    write_profile_csv,
)
from .schemes2d import (
    Advection2DSpec,
    SchemeCoefficients2D,
    coefficients_2d,
    is_monotone_2d,
    step_2d,
    step_2d_flux_form,
)
from .vonneumann import (
    StabilityMap,
    amplification_1d,
    amplification_2d,
    axis_intercept,
    region_area,
    stability_limit_1d_numeric,
    stability_map_2d,
    stability_map_2d_force_alpha,
    write_map_csv,
    write_map_pgm,
)

__version__ = "0.1.0"
