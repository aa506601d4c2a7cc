"""Shared reference data and independent oracles for the test suite.

The star-state references were frozen from a 50-digit bisection solve of
the pressure equation (mass-flux shock branch, isentropic rarefaction
branch); :func:`bisect_star` reproduces that oracle in float arithmetic
and is kept deliberately independent of the production Newton solver.

Note on STAR_REFERENCE[5] (test 6): the published 4-decimal table entry
for that row is internally inconsistent (its velocity cell holds a stale
pressure value and its pressure cell repeats the previous row; the
printed star velocity would also violate u* < u_L).  The frozen values
below are consistent with the published exact maximal wave speed 88.8686
for the same data.
"""

import math

GAMMA = 1.4

# rho_l, u_l, p_l, rho_r, u_r, p_r
TEST_DATA = [
    (1.0, 0.0, 1.0, 1.0, 0.0, 0.1),
    (1.0, 0.0, 1.0, 0.125, 0.0, 0.1),
    (1.0, 0.0, 1.0, 0.001, 0.0, 0.8),
    (1.0, 0.0, 0.01, 1.0, 0.0, 1000.0),
    (6.0, 8.0, 460.0, 6.0, -6.0, 46.0),
    (600.0, 80.0, 4600.0, 6.0, -6.0, 46.0),
    (1.0, -2.0, 0.4, 1.0, 2.0, 0.4),
]

# High-precision (p_star, u_star) per test, frozen from the 50-digit oracle.
STAR_REFERENCE = [
    (0.52191112238136841, 0.5248148700186476),
    (0.30313017805064682, 0.92745262004894995),
    (0.8060255833887164, 0.17947034470522629),
    (460.89378749138354, -19.597451388723052),
    (790.2927898095417, 3.819449720906497),
    (44992.568534215703, 72.962865630416263),
    (0.001893873420054763, 0.0),
]

# (u_star, p_star) to four decimals as published; rows 1-5 and 7 are sound,
# row 6 is the corrupt entry discussed in the module docstring.
PRINTED_STAR = [
    (0.5248, 0.5219),
    (0.9274, 0.3031),
    (0.1794, 0.8060),
    (-19.5975, 460.8938),
    (3.8194, 790.2928),
    None,
    (0.0000, 0.0019),
]

# Published maximal wave speeds: exact, davis_a, davis_b, toro, batten, einfeldt.
PRINTED_SR = [
    (0.8039, 0.3742, 1.1832, 0.8134, 0.8775, 0.8775),
    (1.7522, 1.0583, 1.1832, 1.7621, 1.1519, 1.1519),
    (33.5742, 33.4664, 33.4664, 33.5742, 33.4664, 5.9740),
    (37.4166, 37.4166, 37.4166, 37.4166, 37.4166, 26.4576),
    (6.6330, -2.7238, 18.3602, 7.5400, 9.2966, 10.1397),
    (88.8686, -2.7238, 83.2762, 716.2437, 83.7136, 89.9681),
    (2.7483, 2.7483, 2.7483, 2.7483, 2.7483, 1.6000),
]

# Published bound-failure (boldface) pattern, columns in table order.
PRINTED_MASKS = [
    "10000",
    "11011",
    "11011",
    "00001",
    "10000",
    "11010",
    "00001",
]

# Two-rarefaction star-pressure bound for test 1, frozen from the oracle.
TEST1_TWO_RAREFACTION = 0.534629680862


def _oracle_side(p, rho_k, p_k, g):
    c_k = math.sqrt(g * p_k / rho_k)
    if p > p_k:
        # mass-flux form of the shock branch
        m = math.sqrt(rho_k * (0.5 * (g + 1.0) * p + 0.5 * (g - 1.0) * p_k))
        return (p - p_k) / m
    return 2.0 * c_k / (g - 1.0) * ((p / p_k) ** ((g - 1.0) / (2.0 * g)) - 1.0)


def bisect_star(rho_l, u_l, p_l, rho_r, u_r, p_r, g=GAMMA, iterations=200):
    """Star state by plain bisection; independent of the Newton solver."""
    du = u_r - u_l

    def f(p):
        return _oracle_side(p, rho_l, p_l, g) + _oracle_side(p, rho_r, p_r, g) + du

    lo, hi = 1e-300, 10.0 * max(p_l, p_r)
    while f(hi) < 0.0:
        hi *= 10.0
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    p_star = 0.5 * (lo + hi)
    u_star = 0.5 * (u_l + u_r) + 0.5 * (
        _oracle_side(p_star, rho_r, p_r, g) - _oracle_side(p_star, rho_l, p_l, g)
    )
    return p_star, u_star
