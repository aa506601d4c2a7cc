import io
import math

import pytest
from hypothesis import given

from wavebound import (
    PrimitiveState,
    RiemannProblem,
    batten,
    davis_a,
    davis_b,
    einfeldt,
    estimator_table,
    exact_wave_speeds,
    rusanov_speed,
    solve_star,
    sound_speed,
    toro,
    two_rarefaction_pressure,
    write_estimator_table_csv,
)
from wavebound.estimators import TABLE_ORDER, EstimatorId

import reference
from test_euler import finite_state, mirrored

GAMMA = reference.GAMMA

ALL_ESTIMATORS = (davis_a, davis_b, einfeldt, batten, toro)


def vacuum_safe(left, right, margin=0.95):
    g = GAMMA
    gap = 2.0 * (sound_speed(left, g) + sound_speed(right, g)) / (g - 1.0)
    return right.u - left.u < margin * gap


class TestIndividualEstimators:
    def test_published_maximal_speeds(self, standard_problems):
        columns = {
            davis_a: 1,
            davis_b: 2,
            toro: 3,
            batten: 4,
            einfeldt: 5,
        }
        for rp, row in zip(standard_problems, reference.PRINTED_SR):
            for estimator, col in columns.items():
                assert estimator(rp).s_right == pytest.approx(row[col], abs=1e-3), (
                    f"{estimator.__name__} on test {row}"
                )

    def test_equal_quiescent_states(self):
        s = PrimitiveState(1.3, 0.0, 2.0)
        rp = RiemannProblem(s, s, GAMMA)
        c = sound_speed(s, GAMMA)
        for estimator in ALL_ESTIMATORS:
            pair = estimator(rp)
            assert pair.s_left == pytest.approx(-c, rel=1e-12)
            assert pair.s_right == pytest.approx(c, rel=1e-12)

    @given(s=finite_state)
    def test_equal_states_collapse(self, s):
        rp = RiemannProblem(s, s, GAMMA)
        c = sound_speed(s, GAMMA)
        for estimator in ALL_ESTIMATORS:
            pair = estimator(rp)
            assert pair.s_left == pytest.approx(s.u - c, rel=1e-9, abs=1e-12)
            assert pair.s_right == pytest.approx(s.u + c, rel=1e-9, abs=1e-12)

    def test_einfeldt_symmetric_rarefaction(self, standard_problems):
        # rho = 1, u = -/+2, p = 0.4: averaged velocity 0 and
        # d^2 = c^2 + (u_R - u_L)^2 / 8 = 0.56 + 2
        pair = einfeldt(standard_problems[6])
        assert pair.s_right == pytest.approx(math.sqrt(2.56), rel=1e-12)
        assert pair.s_left == pytest.approx(-math.sqrt(2.56), rel=1e-12)

    @given(left=finite_state, right=finite_state)
    def test_roe_based_pairs_are_ordered(self, left, right):
        rp = RiemannProblem(left, right, GAMMA)
        for estimator in (einfeldt, batten):
            pair = estimator(rp)
            assert pair.s_left <= pair.s_right

    @given(left=finite_state, right=finite_state)
    def test_mirror_symmetry(self, left, right):
        if not vacuum_safe(left, right):
            return
        rp = RiemannProblem(left, right, GAMMA)
        for estimator in ALL_ESTIMATORS:
            pair = estimator(rp)
            pair_m = estimator(mirrored(rp))
            assert pair_m.s_left == pytest.approx(-pair.s_right, rel=1e-13, abs=1e-13)
            assert pair_m.s_right == pytest.approx(-pair.s_left, rel=1e-13, abs=1e-13)


class TestTwoRarefactionPressure:
    def test_exact_for_double_rarefaction(self, standard_problems):
        # both waves of test 7 are rarefactions, so the bound is the solution
        p_rr = two_rarefaction_pressure(standard_problems[6])
        assert p_rr == pytest.approx(reference.STAR_REFERENCE[6][0], rel=1e-10)

    def test_equal_states(self):
        s = PrimitiveState(2.0, 1.0, 5.0)
        assert two_rarefaction_pressure(RiemannProblem(s, s, GAMMA)) == pytest.approx(
            5.0, rel=1e-12
        )

    def test_bounds_star_pressure_on_test1(self, standard_problems):
        p_rr = two_rarefaction_pressure(standard_problems[0])
        assert p_rr == pytest.approx(reference.TEST1_TWO_RAREFACTION, rel=1e-9)
        assert p_rr >= solve_star(standard_problems[0]).p_star

    @given(left=finite_state, right=finite_state)
    def test_bounds_star_pressure(self, left, right):
        if not vacuum_safe(left, right):
            return
        rp = RiemannProblem(left, right, GAMMA)
        assert two_rarefaction_pressure(rp) >= solve_star(rp).p_star * (1.0 - 1e-12)


class TestToroBounds:
    def test_bounds_on_standard_tests(self, standard_problems):
        for rp in standard_problems:
            s_left, s_right = exact_wave_speeds(rp)
            pair = toro(rp)
            assert pair.s_right >= s_right
            assert pair.s_left <= s_left


class TestRusanovSpeed:
    def test_trivial_pairs(self):
        from wavebound import WaveSpeedPair

        assert rusanov_speed(WaveSpeedPair(-1.0, 2.0)) == 2.0
        assert rusanov_speed(WaveSpeedPair(-3.0, 2.0)) == 3.0

    def test_strong_two_shock_case(self, standard_problems):
        # left speed 8 - sqrt(1.4 * 460 / 6) is smaller in magnitude than
        # the (negative) right estimate, so the right one wins
        pair = davis_a(standard_problems[4])
        expected = max(abs(8.0 - math.sqrt(1.4 * 460.0 / 6.0)), abs(pair.s_right))
        assert rusanov_speed(pair) == pytest.approx(expected, rel=1e-15)


class TestEstimatorTable:
    def test_reproduces_published_table(self, standard_problems):
        rows = estimator_table(standard_problems)
        for row, printed, mask in zip(rows, reference.PRINTED_SR, reference.PRINTED_MASKS):
            assert row.exact == pytest.approx(printed[0], abs=1e-3)
            assert row.davis_a == pytest.approx(printed[1], abs=1e-3)
            assert row.davis_b == pytest.approx(printed[2], abs=1e-3)
            assert row.toro == pytest.approx(printed[3], abs=1e-3)
            assert row.batten == pytest.approx(printed[4], abs=1e-3)
            assert row.einfeldt == pytest.approx(printed[5], abs=1e-3)
            assert row.bound_fail_mask == mask

    def test_toro_never_flagged(self, standard_problems):
        toro_pos = TABLE_ORDER.index(EstimatorId.TORO)
        for row in estimator_table(standard_problems):
            assert row.bound_fail_mask[toro_pos] == "0"

    def test_equal_states_row(self):
        s = PrimitiveState(1.0, 0.3, 1.0)
        rows = estimator_table([RiemannProblem(s, s, GAMMA)])
        (row,) = rows
        expected = 0.3 + sound_speed(s, GAMMA)
        for which in TABLE_ORDER:
            assert row.estimate(which) == pytest.approx(expected, rel=1e-12)
        assert row.exact == pytest.approx(expected, rel=1e-12)
        assert row.bound_fail_mask == "00000"

    def test_csv_layout(self, standard_problems):
        rows = estimator_table(standard_problems[:1])
        buffer = io.StringIO()
        write_estimator_table_csv(rows, buffer)
        lines = buffer.getvalue().splitlines()
        assert lines[0] == "test,exact,davis_a,davis_b,toro,batten,einfeldt,bound_fail_mask"
        assert lines[1] == "1,0.8039,0.3742,1.1832,0.8134,0.8775,0.8775,10000"
