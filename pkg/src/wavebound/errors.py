"""Exception types raised by the numerical routines."""


class WaveboundError(Exception):
    """Base class for numerical failures in this package."""


class VacuumGeneratedError(WaveboundError):
    """The Riemann data would open a vacuum region between the waves."""


class NoConvergenceError(WaveboundError):
    """An iteration exhausted its step budget without converging."""


class ImaginarySoundSpeedError(WaveboundError):
    """Roe-average enthalpy too small to define a real sound speed."""


class DegenerateSpeedsError(WaveboundError):
    """Coincident wave-speed estimates leave the two-wave flux undefined."""


class ZeroMaxSpeedError(WaveboundError):
    """Data carry no signal; a CFL time step would be unbounded."""
