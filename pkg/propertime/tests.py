import django.test as dt

import logging
import math

import numpy as np

import propertime.clocks as ptc
import spacetime.observers as sto

from hypothesis import given, settings, strategies as st

from propertime.exceptions import NonMonotoneRadarTime, QuadratureDidNotConverge
from propertime.quadrature import adaptive_simpson
from propertime.trajectories import RadarTrajectory, radar_trajectory_of
from spacetime.exceptions import NoRadarCoordinate, SpeedLimitExceeded
from spacetime.splitc import LightspeedContext

logger = logging.getLogger(__name__)


class QuadratureTest(dt.SimpleTestCase):
    def test_polynomial(self):
        result = adaptive_simpson(lambda t: t ** 3, 0, 2)
        self.assertAlmostEqual(result.value, 4.0, places=12)
        self.assertGreaterEqual(result.abs_error_estimate, 0)

    def test_oscillating(self):
        result = adaptive_simpson(math.cos, 0, 10, tol=1e-11)
        self.assertAlmostEqual(result.value, math.sin(10), places=9)
        self.assertGreater(result.n_evals, 5)

    def test_reversed_and_empty(self):
        self.assertAlmostEqual(adaptive_simpson(math.exp, 1, 0).value, 1 - math.e)
        self.assertEqual(adaptive_simpson(math.exp, 1, 1).value, 0.0)

    def test_cap(self):
        with self.assertRaises(QuadratureDidNotConverge):
            adaptive_simpson(lambda t: 1 / math.sqrt(t) if t > 0 else 1e300,
                             0, 1, max_intervals=50)


class InertialClockTest(dt.SimpleTestCase):
    def test_rest(self):
        result = ptc.proper_time_inertial(RadarTrajectory.constant(0.0, (0, 3)))
        self.assertAlmostEqual(result.tau, 3.0, places=12)

    def test_uniform_motion(self):
        result = ptc.proper_time_inertial(RadarTrajectory.uniform(0.0, 0.6, (0, 1)))
        self.assertAlmostEqual(result.tau, 0.8, places=12)

    def test_units(self):
        ctx = LightspeedContext(3.0)
        traj = RadarTrajectory.uniform(0.0, 1.8, (0, 2))
        self.assertAlmostEqual(ptc.proper_time_inertial(traj, ctx).tau, 1.6)

    def test_tanh_velocity(self):
        traj = RadarTrajectory(lambda t: math.log(math.cosh(t)), math.tanh, (0, 1))
        expected = 2 * math.atan(math.tanh(0.5))
        self.assertAlmostEqual(ptc.proper_time_inertial(traj).tau, expected,
                               places=9)

    def test_speed_limit(self):
        traj = RadarTrajectory(lambda t: t * t, lambda t: 2 * t, (0, 1))
        with self.assertRaises(SpeedLimitExceeded):
            ptc.proper_time_inertial(traj)


class AcceleratedClockTest(dt.SimpleTestCase):
    def test_inertial_observer_reduces(self):
        traj = RadarTrajectory(lambda t: 0.3 * math.sin(t), lambda t: 0.3 * math.cos(t),
                               (0, 2))
        inertial = ptc.proper_time_inertial(traj, tol=1e-10).tau
        accelerated = ptc.proper_time_accelerated(sto.Inertial(0.4), traj,
                                                  tol=1e-10).tau
        self.assertLessEqual(abs(inertial - accelerated), 2e-10)

    @settings(max_examples=20, deadline=None)
    @given(st.floats(min_value=-1.5, max_value=1.5),
           st.floats(min_value=0.1, max_value=2.0))
    def test_rindler_static_clock(self, x0, dt_):
        traj = RadarTrajectory.constant(x0, (0, dt_))
        tau = ptc.proper_time_accelerated(sto.Rindler(1.0), traj).tau
        self.assertAlmostEqual(tau, math.exp(x0) * dt_, places=9)

    def test_rindler_static_clock_with_units(self):
        ctx = LightspeedContext(2.0)
        traj = RadarTrajectory.constant(0.5, (0, 1))
        tau = ptc.proper_time_accelerated(sto.Rindler(3.0, ctx), traj, ctx).tau
        self.assertAlmostEqual(tau, math.exp(3.0 * 0.5 / 4.0), places=9)


class RadarTrajectoryTest(dt.SimpleTestCase):
    def test_self_radar(self):
        gamma = sto.Rindler(1.0)
        traj = radar_trajectory_of(gamma, gamma, (-1, 1), 101)
        for t in np.linspace(-1, 1, 7):
            self.assertAlmostEqual(traj.x(t), 0.0, places=9)
            self.assertAlmostEqual(traj.v(t), 0.0, places=9)

    def test_moving_observer_seen_at_rest(self):
        traj = radar_trajectory_of(sto.Inertial(0), sto.Inertial(0.5), (0, 2), 51)
        gamma = 1 / math.sqrt(1 - 0.25)
        self.assertAlmostEqual(traj.window[1], 2 * gamma)
        self.assertAlmostEqual(traj.x(1.0), 0.5, places=9)
        self.assertAlmostEqual(traj.v(0.3), 0.5, places=9)

    def test_piecewise_linear_uses_monotone_interpolant(self):
        observed = sto.PiecewiseLinear([(0, 0), (1, 0.5), (2, 0.5)])
        traj = radar_trajectory_of(sto.Inertial(0), observed, (0, 2), 201)
        self.assertAlmostEqual(traj.x(0.5), 0.25, places=6)
        self.assertAlmostEqual(traj.v(1.5), 0.0, places=6)

    def test_static_clock_seen_by_rindler(self):
        traj = radar_trajectory_of(sto.Rindler(1.0), sto.Inertial(0, base=(0, 1)),
                                   (-0.5, 0.5), 201)
        self.assertAlmostEqual(traj.x(0.0), 0.0, places=9)
        self.assertLess(traj.x(0.4), 0.0)

    def test_outside_wedge(self):
        with self.assertRaises(NoRadarCoordinate):
            radar_trajectory_of(sto.Rindler(1.0), sto.Inertial(0), (-1, 1), 11)

    def test_non_monotone(self):
        # the spacelike second segment runs backwards in the fast observer's time
        observed = sto.PiecewiseLinear([(0, 0), (1, 0.5), (2, 2.0)])
        with self.assertRaises(NonMonotoneRadarTime):
            radar_trajectory_of(sto.Inertial(0.99), observed, (0, 2), 21)


class ProperTimeAlongTest(dt.SimpleTestCase):
    def test_inertial(self):
        self.assertAlmostEqual(
            ptc.proper_time_along(sto.Inertial(0.9), (0, 2)).tau, 2.0, places=12)

    def test_piecewise_linear(self):
        gamma = sto.PiecewiseLinear([(0, 0), (1, 0.6), (2, 0)])
        self.assertAlmostEqual(ptc.proper_time_along(gamma, (0, 2)).tau, 1.6,
                               places=12)

    def test_monotone_in_window(self):
        gamma = sto.PerturbedInertial(0.5, 1.0)
        taus = [ptc.proper_time_along(gamma, (0, s)).tau for s in (0.5, 1.0, 2.0, 4.0)]
        self.assertEqual(taus, sorted(taus))


class TwinTest(dt.SimpleTestCase):
    def test_rindler_twin(self):
        report = ptc.twin_consistency(sto.Inertial(0, base=(0, 2)), sto.Rindler(1.0),
                                      (-1, 1))
        self.assertTrue(report.consistent)
        self.assertAlmostEqual(report.tau_a_by_a, 2.0, places=10)
        self.assertAlmostEqual(report.tau_a_by_b, 2.0, places=6)
        self.assertAlmostEqual(report.tau_b_by_b, 2 * math.atanh(0.5), places=10)
        self.assertAlmostEqual(report.tau_b_by_a, 2 * math.atanh(0.5), places=6)
        self.assertAlmostEqual(report.window_b[1], math.atanh(0.5), places=9)
        self.assertEqual(report.younger, 'B')

    def test_same_twin(self):
        gamma = sto.PerturbedInertial(0.3, 1.0)
        report = ptc.twin_consistency(gamma, gamma, (0, 2))
        self.assertTrue(report.consistent)
        self.assertEqual(report.younger, 'neither')
        self.assertAlmostEqual(report.tau_a_by_b, report.tau_b_by_a, places=8)

    def test_boosted_pair(self):
        report = ptc.twin_consistency(sto.Inertial(0), sto.Inertial(0.6), (0, 1))
        self.assertTrue(report.consistent)
        self.assertAlmostEqual(report.window_b[1], 1.25, places=9)
        self.assertLessEqual(abs(report.tau_a_by_b - 1.0), 1e-9)
        self.assertLessEqual(abs(report.tau_b_by_a - 1.25), 1e-9)

    def test_sampling_density(self):
        first = ptc.twin_consistency(sto.Inertial(0, base=(0, 2)), sto.Rindler(1.0),
                                     (-1, 1), n=401)
        second = ptc.twin_consistency(sto.Inertial(0, base=(0, 2)), sto.Rindler(1.0),
                                      (-1, 1), n=802)
        self.assertAlmostEqual(first.tau_a_by_b, second.tau_a_by_b, places=7)


class DilationTest(dt.SimpleTestCase):
    def test_no_separation(self):
        self.assertEqual(ptc.gravitational_dilation(1.0, 0.3, 0.3, 1.0).ratio, 1.0)

    def test_half_rate(self):
        result = ptc.gravitational_dilation(-1.0, 0.0, math.log(2), 1.0)
        self.assertAlmostEqual(result.ratio, 0.5)
        self.assertEqual(result.g, 1.0)

    def test_cross_check(self):
        result = ptc.gravitational_dilation(0.8, -0.5, 0.7, 2.0)
        self.assertLessEqual(result.cross_check_error, 1e-9)

    def test_zero_acceleration(self):
        result = ptc.gravitational_dilation(0.0, -1.0, 1.0, 1.5)
        self.assertEqual(result.tau_x2, 1.5)
        self.assertLessEqual(result.cross_check_error, 1e-12)

    def test_invalid_interval(self):
        with self.assertRaises(ValueError):
            ptc.gravitational_dilation(1.0, 0.0, 1.0, 0.0)
