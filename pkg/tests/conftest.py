import numpy as np
import pytest

from wavebound import PrimitiveState, RiemannProblem

import reference


@pytest.fixture
def standard_problems():
    return [
        RiemannProblem(
            left=PrimitiveState(d[0], d[1], d[2]),
            right=PrimitiveState(d[3], d[4], d[5]),
            gamma=reference.GAMMA,
        )
        for d in reference.TEST_DATA
    ]


def random_admissible_problems(rng: np.random.Generator, count: int):
    """Log-uniform densities/pressures, uniform velocities, vacuum-filtered."""
    problems = []
    g = reference.GAMMA
    while len(problems) < count:
        n = count - len(problems)
        rho = 10.0 ** rng.uniform(-3, 3, size=(n, 2))
        p = 10.0 ** rng.uniform(-3, 3, size=(n, 2))
        u = rng.uniform(-50.0, 50.0, size=(n, 2))
        c = np.sqrt(g * p / rho)
        admissible = 2.0 * (c[:, 0] + c[:, 1]) / (g - 1.0) > u[:, 1] - u[:, 0]
        for i in np.nonzero(admissible)[0]:
            problems.append(
                RiemannProblem(
                    left=PrimitiveState(rho[i, 0], u[i, 0], p[i, 0]),
                    right=PrimitiveState(rho[i, 1], u[i, 1], p[i, 1]),
                    gamma=g,
                )
            )
    return problems[:count]
