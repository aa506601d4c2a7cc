import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wavebound import CourantPair, Grid1D, RunConfig, build_grid


def test_build_grid_dx():
    assert build_grid(100, 0.0, 1.0).dx == pytest.approx(0.01, abs=0)
    assert build_grid(1, 0.0, 1.0).dx == 1.0


def test_build_grid_centers():
    grid = build_grid(4, -1.0, 1.0)
    assert grid.dx == 0.5
    np.testing.assert_allclose(grid.cell_centers(), [-0.75, -0.25, 0.25, 0.75])


def test_build_grid_rejects_bad_input():
    with pytest.raises(ValueError):
        build_grid(0, 0.0, 1.0)
    with pytest.raises(ValueError):
        build_grid(10, 1.0, 1.0)
    with pytest.raises(ValueError):
        build_grid(10, 2.0, 1.0)
    with pytest.raises(ValueError):
        Grid1D(10, 0.0, 1.0, boundary="reflective")


@given(
    n=st.integers(min_value=1, max_value=10_000),
    x_min=st.floats(min_value=-1e6, max_value=1e6),
    width=st.floats(min_value=1e-6, max_value=1e6),
)
def test_cell_widths_tile_domain(n, x_min, width):
    grid = build_grid(n, x_min, x_min + width)
    assert n * grid.dx == pytest.approx(grid.length, rel=1e-15)


def test_courant_pair_validation():
    assert CourantPair(0.0, 0.0).cx == 0.0
    with pytest.raises(ValueError):
        CourantPair(-0.1, 0.5)


def test_run_config_validation():
    cfg = RunConfig(cfl_coefficient=0.9, output_time=4.0, courant_number=0.7)
    assert cfg.cfl_coefficient == 0.9
    with pytest.raises(ValueError):
        RunConfig(cfl_coefficient=0.0)
    with pytest.raises(ValueError):
        RunConfig(cfl_coefficient=1.5)
    with pytest.raises(ValueError):
        RunConfig(output_time=-1.0)
    with pytest.raises(ValueError):
        RunConfig(courant_number=0.0)
